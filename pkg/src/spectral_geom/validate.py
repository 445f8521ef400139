"""Seeded property suite behind the `validate` CLI subcommand.

Each family re-runs one of the package's core guarantees on freshly
generated random inputs and reports its worst residual: state invariance
under unitary factors and rescaling, the metric axioms of the Fisher-Rao
distance, the curvature probe against the expected constant 1/4, and the
consistency of aligned transport with matrix-level composition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .composition import aligned_transport
from .geometry import fr_distance, triangle_excess
from .linalg import random_unitary
from .spectral import spectral_state

INVARIANCE_TOL = 1e-9
METRIC_TOL = 1e-9
CURVATURE_REL_TOL = 0.05
TRANSPORT_TOL = 1e-9

CURVATURE_TARGET = 0.25


@dataclass(frozen=True)
class FamilyResult:
    name: str
    passed: bool
    max_residual: float
    tolerance: float


def _random_interior_state(rng: np.random.Generator, n: int) -> np.ndarray:
    """Dirichlet draw mixed with the barycentre to stay safely interior."""
    lam = 0.9 * rng.dirichlet(np.ones(n)) + 0.1 / n
    return lam / lam.sum()


def _child_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(2**31 - 1))


def check_invariance(seed: int, trials: int) -> FamilyResult:
    """lambda(U O V) == lambda(O) == lambda(c O) on random tuples."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        m = int(rng.integers(2, 7))
        n = int(rng.integers(2, 7))
        o = rng.standard_normal((m, n))
        u = random_unitary(m, _child_seed(rng))
        v = random_unitary(n, _child_seed(rng))
        c = float(rng.choice([-1.0, 1.0]) * 10.0 ** rng.uniform(-6.0, 6.0))
        k = min(m, n)
        lam = spectral_state(o, k)
        worst = max(
            worst,
            float(np.max(np.abs(spectral_state(u @ o @ v, k) - lam))),
            float(np.max(np.abs(spectral_state(c * o, k) - lam))),
        )
    return FamilyResult("invariance", worst <= INVARIANCE_TOL, worst, INVARIANCE_TOL)


def check_metric_axioms(seed: int, trials: int) -> FamilyResult:
    """Non-negativity, identity, symmetry and the triangle inequality."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        a = _random_interior_state(rng, n)
        b = _random_interior_state(rng, n)
        c = _random_interior_state(rng, n)
        d_ab = fr_distance(a, b)
        d_ba = fr_distance(b, a)
        d_ac = fr_distance(a, c)
        d_bc = fr_distance(b, c)
        worst = max(
            worst,
            -min(d_ab, d_ac, d_bc),          # non-negativity
            fr_distance(a, a),               # identity
            abs(d_ab - d_ba),                # symmetry
            d_ac - (d_ab + d_bc),            # triangle inequality
        )
    return FamilyResult("metric-axioms", worst <= METRIC_TOL, worst, METRIC_TOL)


def _perturbation_pair(n: int) -> tuple[np.ndarray, np.ndarray]:
    p1 = np.zeros(n)
    p1[0], p1[1] = 1.0, -1.0
    p2 = np.zeros(n)
    p2[1], p2[2] = 1.0, -1.0
    return p1, p2


def check_curvature(seed: int, trials: int) -> FamilyResult:
    """Excess/area of small geodesic triangles stays within 5% of 1/4."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(3, 6))
        base = _random_interior_state(rng, n)
        p1, p2 = _perturbation_pair(n)
        # Keeps all sides inside the probe's (1e-3, 0.2) working range.
        scale = 0.1 * float(np.min(base))
        a = base + scale * p1
        b = base + scale * p2
        c = base - scale * (p1 + p2)
        excess, area = triangle_excess(a / a.sum(), b / b.sum(), c / c.sum())
        estimate = excess / area
        worst = max(worst, abs(estimate - CURVATURE_TARGET) / CURVATURE_TARGET)
    return FamilyResult(
        "curvature", worst <= CURVATURE_REL_TOL, worst, CURVATURE_REL_TOL
    )


def check_transport_consistency(seed: int, trials: int) -> FamilyResult:
    """Aligned transport prediction against matrix-level composition."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        alpha = np.sort(rng.uniform(0.2, 3.0, n))[::-1]
        beta = np.sort(rng.uniform(0.2, 3.0, n))[::-1]
        q = random_unitary(n, _child_seed(rng))
        w = random_unitary(n, _child_seed(rng))
        v = random_unitary(n, _child_seed(rng))
        a = w @ np.diag(alpha) @ v.T
        b = q @ np.diag(beta) @ w.T
        predicted = aligned_transport(spectral_state(a, n), beta)
        actual = spectral_state(b @ a, n)
        worst = max(worst, float(np.max(np.abs(predicted - actual))))
    return FamilyResult(
        "transport-consistency", worst <= TRANSPORT_TOL, worst, TRANSPORT_TOL
    )


def run_all(seed: int, trials: int) -> list[FamilyResult]:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    return [
        check_invariance(seed, trials),
        check_metric_axioms(seed, trials),
        check_curvature(seed, trials),
        check_transport_consistency(seed, trials),
    ]
