"""Fisher-Rao geometry on the interior of the probability simplex.

The metric g_ij = delta_ij / (4 * lam_i) turns the open simplex into a
constant-curvature space: taking coordinatewise square roots maps it onto
the positive orthant of the unit sphere, with simplex distances equal to
twice the sphere's arc angles (a radius-2 sphere, curvature 1/4).

Distance extends continuously to the boundary, but the metric tensor,
geodesics, embedding and curvature probes are interior-only: boundary
points are not part of the Riemannian manifold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundaryError
from .spectral import as_state

# A state counts as strictly interior when every coordinate exceeds this.
INTERIOR_MIN = 1e-15
# Minimum pairwise separation for the curvature probe's triangles.
TRIANGLE_MIN_SIDE = 1e-3
# Interior angles closer than this to 0 or pi mean a degenerate triangle.
DEGENERATE_ANGLE = 1e-6


@dataclass(frozen=True)
class GeodesicPath:
    """Uniformly parameterised samples of the geodesic joining a and b."""

    a: np.ndarray
    b: np.ndarray
    t: np.ndarray        # shape (steps,), strictly increasing, 0..1
    states: np.ndarray   # shape (steps, n), each row an interior state

    def length(self) -> float:
        """Riemannian length of the sampled polyline (midpoint rule)."""
        return path_length(self.states)


def _require_interior(lam: np.ndarray) -> np.ndarray:
    if np.min(lam) <= INTERIOR_MIN:
        raise BoundaryError(
            "state lies on the simplex boundary; this operation is only "
            "defined for strictly interior states"
        )
    return lam


def metric_tensor(state) -> np.ndarray:
    """Diagonal Fisher-Rao metric diag(1 / (4 lam_i)) at an interior state.

    This is the quarter-normalised form of the simplex Fisher information;
    the closed-form distance and path_length use the un-quartered line
    element (4x these components), which differs only by the constant
    factor 2 on lengths. Geodesics are identical under both.
    """
    lam = _require_interior(as_state(state))
    return np.diag(1.0 / (4.0 * lam))


def fr_distance(a, b) -> float:
    """Fisher-Rao distance 2*arccos(sum_i sqrt(a_i b_i)).

    Evaluated in the equivalent form 4*arcsin(||sqrt(a)-sqrt(b)|| / 2),
    which returns exactly 0.0 for identical states instead of the ~1e-8
    noise the arccos form picks up near coincidence. Accepts boundary
    states: the formula is their continuous limit.
    """
    a = as_state(a)
    b = as_state(b)
    if a.size != b.size:
        raise ValueError(f"state lengths differ: {a.size} vs {b.size}")
    half_chord = 0.5 * np.linalg.norm(np.sqrt(a) - np.sqrt(b))
    return float(4.0 * np.arcsin(min(half_chord, 1.0)))


def sphere_embed(state) -> np.ndarray:
    """Square-root coordinates: a unit vector in the open positive orthant."""
    lam = _require_interior(as_state(state))
    return np.sqrt(lam)


def geodesic(a, b, steps: int) -> GeodesicPath:
    """The unique Fisher-Rao geodesic between two interior states.

    Samples gamma(t) = ((1-t) sqrt(a) + t sqrt(b))^2 / normalisation at
    steps uniformly spaced parameter values t = k/(steps-1). Every sample
    keeps full support; the endpoint samples are pinned to a and b exactly.
    """
    a = _require_interior(as_state(a))
    b = _require_interior(as_state(b))
    if a.size != b.size:
        raise ValueError(f"state lengths differ: {a.size} vs {b.size}")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    if np.array_equal(a, b):
        raise ValueError("degenerate path: endpoints coincide")
    t = np.linspace(0.0, 1.0, steps)
    mix = np.outer(1.0 - t, np.sqrt(a)) + np.outer(t, np.sqrt(b))
    states = mix**2
    states /= states.sum(axis=1, keepdims=True)
    states[0] = a
    states[-1] = b
    return GeodesicPath(a=a, b=b, t=t, states=states)


def path_length(states) -> float:
    """Length of a discrete interior path, in the same units as fr_distance.

    Midpoint rule with the distance-normalised line element
    ds^2 = sum_i dlam_i^2 / lam_i, i.e. 4x the tensor of metric_tensor().
    The closed-form distance (prefactor 2, curvature 1/4) belongs to this
    normalisation; lengths measured against metric_tensor's literal
    components would come out exactly half as long.
    """
    states = np.asarray(states, dtype=float)
    if states.ndim != 2 or states.shape[0] < 2:
        raise ValueError("need a (steps, n) array with at least two rows")
    if np.min(states) <= 0.0:
        raise BoundaryError("path touches the simplex boundary")
    delta = np.diff(states, axis=0)
    mid = 0.5 * (states[1:] + states[:-1])
    segments = np.sqrt(np.sum(delta**2 / mid, axis=1))
    return float(segments.sum())


def entropy(state, bits: bool = False) -> float:
    """Shannon entropy of a state, in nats (or bits), with 0 log 0 = 0."""
    lam = as_state(state)
    positive = lam[lam > 0.0]
    h = float(-np.sum(positive * np.log(positive))) + 0.0  # +0.0 kills -0.0
    return h / np.log(2.0) if bits else h


def _tangent(at: np.ndarray, towards: np.ndarray) -> np.ndarray:
    """Unit tangent at a sphere point along the great circle to another."""
    t = towards - (at @ towards) * at
    norm = np.linalg.norm(t)
    if norm < 1e-15:
        raise ValueError("degenerate triangle: coincident or antipodal vertices")
    return t / norm


def _vertex_angle(at: np.ndarray, p: np.ndarray, q: np.ndarray) -> float:
    cos_angle = _tangent(at, p) @ _tangent(at, q)
    return float(np.arccos(np.clip(cos_angle, -1.0, 1.0)))


def triangle_excess(a, b, c) -> tuple[float, float]:
    """Angle excess and flat area estimate of a geodesic triangle.

    Returns (excess, area_estimate) where excess is the interior-angle sum
    minus pi (angles measured between great circles through the square-root
    embeddings) and area_estimate is Heron's formula applied to the three
    Fisher-Rao side lengths. On a constant-curvature surface
    excess / area -> curvature as the triangle shrinks, so the ratio is a
    numerical probe of the expected value 1/4.
    """
    ea, eb, ec = sphere_embed(a), sphere_embed(b), sphere_embed(c)
    if ea.size != eb.size or eb.size != ec.size:
        raise ValueError("states must share a common length")
    d_ab = fr_distance(a, b)
    d_bc = fr_distance(b, c)
    d_ca = fr_distance(c, a)
    if min(d_ab, d_bc, d_ca) <= TRIANGLE_MIN_SIDE:
        raise ValueError(
            f"triangle sides must exceed {TRIANGLE_MIN_SIDE}; "
            "vertices are too close"
        )
    angles = [
        _vertex_angle(ea, eb, ec),
        _vertex_angle(eb, ec, ea),
        _vertex_angle(ec, ea, eb),
    ]
    if min(angles) < DEGENERATE_ANGLE or max(angles) > np.pi - DEGENERATE_ANGLE:
        raise ValueError("degenerate triangle: vertices are collinear on the sphere")
    excess = sum(angles) - np.pi
    s = 0.5 * (d_ab + d_bc + d_ca)
    heron = s * (s - d_ab) * (s - d_bc) * (s - d_ca)
    if heron <= 0.0:
        raise ValueError("degenerate triangle: vertices are collinear on the sphere")
    return float(excess), float(np.sqrt(heron))
