"""Operators to spectral states: points on the probability simplex.

A spectral state is the normalised squared singular spectrum of a non-zero
operator, stored as a 1-D float64 array summing to one. States derived
from operators are sorted non-increasing because singular values are;
general simplex points handled by the geometry module need not be sorted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import as_matrix, svd

# Absolute threshold below which a coordinate counts as lying on a face.
FACE_ZERO_TOL = 1e-12
# Orthonormality residual admitted for a matrix claimed to be unitary.
UNITARY_RESIDUAL_TOL = 1e-8
# Slack admitted on sum(state) == 1 for externally supplied states.
STATE_SUM_TOL = 1e-9


@dataclass(frozen=True)
class FaceDescriptor:
    """Which stratum of the simplex a state occupies."""

    support_size: int
    codimension: int
    interior: bool


def as_state(lam) -> np.ndarray:
    """Validate *lam* as a point of the simplex and return it as float64.

    Entries must be finite and non-negative (tiny negative round-off, down
    to -1e-15, is clipped to zero) and must sum to 1 within STATE_SUM_TOL.
    Sortedness is not required here: geodesic samples and transported
    states are legitimate unsorted simplex points.
    """
    lam = np.asarray(lam, dtype=float)
    if lam.ndim != 1 or lam.size == 0:
        raise ValueError("state must be a non-empty 1-D vector")
    if not np.all(np.isfinite(lam)):
        raise ValueError("state entries must be finite")
    if np.any(lam < -1e-15):
        raise ValueError("state entries must be non-negative")
    lam = np.maximum(lam, 0.0)
    total = float(lam.sum())
    if abs(total - 1.0) > STATE_SUM_TOL:
        raise ValueError(f"state entries must sum to 1, got {total!r}")
    return lam


def state_from_spectrum(sigma, n: int) -> np.ndarray:
    """Normalise a sorted singular spectrum into a length-n state.

    sigma must be non-increasing, non-negative and not all zero; the
    normalised squares are zero-padded up to length n.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 1 or sigma.size == 0:
        raise ValueError("sigma must be a non-empty 1-D vector")
    if n < sigma.size:
        raise ValueError(
            f"spectral dimension n={n} is smaller than the spectrum length "
            f"{sigma.size}"
        )
    if np.any(sigma < 0.0) or np.any(np.diff(sigma) > 0.0):
        raise ValueError("sigma must be sorted non-increasing and non-negative")
    weights = sigma**2
    total = weights.sum()
    if total == 0.0:
        raise DomainError("spectral state undefined for an all-zero spectrum")
    lam = weights / total
    if n > sigma.size:
        lam = np.concatenate([lam, np.zeros(n - sigma.size)])
    return lam


def spectral_state(o, n: int) -> np.ndarray:
    """Spectral state of operator *o* on the simplex of dimension n-1.

    Squares the singular values, normalises them to unit sum, and zero-pads
    to length *n*. The result is sorted non-increasing. The zero operator
    has no spectral state and raises DomainError; n must be at least
    min(o.shape) so no singular value is discarded.
    """
    o = as_matrix(o)
    k = min(o.shape)
    if n < k:
        raise ValueError(
            f"spectral dimension n={n} is smaller than min(o.shape)={k}"
        )
    if np.linalg.norm(o) == 0.0:
        raise DomainError(
            "spectral state undefined for the zero operator: a non-zero "
            "operator is required"
        )
    return state_from_spectrum(svd(o).sigma, n)


def _require_unitary(q: np.ndarray, name: str) -> None:
    if q.shape[0] != q.shape[1]:
        raise ValueError(f"{name} must be square, got {q.shape}")
    residual = np.linalg.norm(q.T @ q - np.eye(q.shape[0]))
    if residual > UNITARY_RESIDUAL_TOL:
        raise ValueError(
            f"{name} is not unitary: orthonormality residual {residual:.3e}"
        )


def check_unitary_invariance(o, u, v, tol: float) -> bool:
    """True iff the states of u @ o @ v and o agree within tol (inf-norm).

    u and v must be orthogonal matrices of shape (o.rows, o.rows) and
    (o.cols, o.cols). Both states are produced by independent SVD runs.
    """
    o = as_matrix(o)
    u = as_matrix(u)
    v = as_matrix(v)
    _require_unitary(u, "u")
    _require_unitary(v, "v")
    if u.shape[0] != o.shape[0] or v.shape[0] != o.shape[1]:
        raise ValueError(
            f"incompatible shapes: u {u.shape}, o {o.shape}, v {v.shape}"
        )
    n = min(o.shape)
    lam = spectral_state(o, n)
    lam_uov = spectral_state(u @ o @ v, n)
    return bool(np.max(np.abs(lam_uov - lam)) <= tol)


def check_scale_invariance(o, c: float, tol: float) -> bool:
    """True iff the states of c * o and o agree within tol (inf-norm)."""
    o = as_matrix(o)
    if c == 0.0:
        raise ValueError("scale factor c must be non-zero")
    n = min(o.shape)
    lam = spectral_state(o, n)
    lam_scaled = spectral_state(c * o, n)
    return bool(np.max(np.abs(lam_scaled - lam)) <= tol)


def face_of(state, zero_tol: float = FACE_ZERO_TOL) -> FaceDescriptor:
    """Locate the simplex face carrying *state*.

    Coordinates above zero_tol count as support; the codimension of the
    face is the number of vanishing coordinates.
    """
    lam = as_state(state)
    support = int(np.count_nonzero(lam > zero_tol))
    if support == 0:
        raise ValueError("state has empty support: every entry is below zero_tol")
    codim = lam.size - support
    return FaceDescriptor(support_size=support, codimension=codim, interior=codim == 0)


def spectrally_equivalent(a, b, tol: float) -> bool:
    """True iff the two states coincide within tol in the inf-norm."""
    a = as_state(a)
    b = as_state(b)
    if a.size != b.size:
        raise ValueError(f"state lengths differ: {a.size} vs {b.size}")
    return bool(np.max(np.abs(a - b)) <= tol)
