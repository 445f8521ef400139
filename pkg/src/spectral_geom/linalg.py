"""Dense linear algebra used by the rest of the package.

Matrices are plain 2-D float64 numpy arrays, validated on entry. The SVD is
a self-contained one-sided Jacobi (cyclic sweeps), which is accurate and
more than fast enough for the desk-scale operators this package targets
(a few hundred rows/cols at most).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError

# Relative threshold below which a column pair counts as orthogonal.
JACOBI_TOL = 1e-14
# Cyclic sweep budget before svd() gives up.
JACOBI_MAX_SWEEPS = 60


class SvdResult(NamedTuple):
    """Thin SVD a = u @ diag(sigma) @ v.T with sigma sorted non-increasing."""

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Validate and return *a* as a 2-D float64 array.

    Rejects empty shapes and non-finite entries; accepts anything
    np.asarray can turn into a numeric 2-D array.
    """
    m = np.asarray(a, dtype=float)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"matrix dimensions must be positive, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(as_matrix(a)))


def _jacobi_sweeps(w: np.ndarray, max_sweeps: int) -> np.ndarray:
    """Orthogonalise the columns of *w* in place by cyclic Jacobi rotations.

    Returns the accumulated right-rotation matrix V (n x n) such that the
    final w equals original_w @ V. Raises ConvergenceError when some column
    pair still fails the relative orthogonality test after *max_sweeps*.
    """
    n = w.shape[1]
    v = np.eye(n)
    if n == 1:
        return v
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                wp = w[:, p]
                wq = w[:, q]
                x = float(wp @ wp)
                y = float(wq @ wq)
                z = float(wp @ wq)
                if abs(z) <= JACOBI_TOL * np.sqrt(x * y):
                    continue
                rotated = True
                theta = 0.5 * np.arctan2(2.0 * z, x - y)
                c = np.cos(theta)
                s = np.sin(theta)
                w[:, p], w[:, q] = c * wp + s * wq, -s * wp + c * wq
                vp = v[:, p].copy()
                v[:, p] = c * vp + s * v[:, q]
                v[:, q] = -s * vp + c * v[:, q]
        if not rotated:
            return v
    raise ConvergenceError(
        f"one-sided Jacobi SVD did not converge within {max_sweeps} sweeps"
    )


def _complete_orthonormal(u: np.ndarray, r: int) -> np.ndarray:
    """Fill columns r..k of *u* with an orthonormal complement of u[:, :r]."""
    m, k = u.shape
    if r == 0:
        u[:, :] = np.eye(m)[:, :k]
        return u
    q = np.linalg.qr(u[:, :r], mode="complete")[0]
    u[:, r:] = q[:, r:k]
    return u


def svd(a, max_sweeps: int = JACOBI_MAX_SWEEPS) -> SvdResult:
    """Thin SVD of a real matrix via one-sided Jacobi.

    Returns SvdResult(u, sigma, v) with u (m x k) and v (n x k) having
    orthonormal columns, k = min(m, n), and sigma sorted non-increasing.
    Columns belonging to exactly-zero singular values are completed to an
    orthonormal set so u and v always satisfy u.T @ u == v.T @ v == I.
    """
    a = as_matrix(a)
    m, n = a.shape
    if m < n:
        # Work on the transpose and swap the factors back.
        ut, sigma, vt = svd(a.T, max_sweeps=max_sweeps)
        return SvdResult(vt, sigma, ut)

    w = a.copy()
    v = _jacobi_sweeps(w, max_sweeps)

    norms = np.linalg.norm(w, axis=0)
    order = np.argsort(-norms, kind="stable")
    sigma = norms[order]
    w = w[:, order]
    v = v[:, order]

    u = np.zeros((m, n))
    r = int(np.count_nonzero(sigma > 0.0))
    if r:
        u[:, :r] = w[:, :r] / sigma[:r]
    if r < n:
        _complete_orthonormal(u, r)
    return SvdResult(u, sigma, v)


def random_unitary(n: int, seed: int) -> np.ndarray:
    """Deterministic random n x n orthogonal matrix for the given seed.

    QR of a seeded standard-normal matrix, with the signs of diag(R)
    absorbed into Q's columns so the result is unique and reproducible.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    signs = np.sign(np.diag(r))
    signs[signs == 0.0] = 1.0
    return q * signs


def default_rank_tol(m: int, n: int) -> float:
    """Standard relative rank cutoff: max(m, n) * eps of float64."""
    return max(m, n) * 2.0**-52


def numerical_rank(sigma, rel_tol: float) -> int:
    """Count singular values above rel_tol * sigma[0].

    sigma must be sorted non-increasing and non-negative; a leading zero
    (i.e. the zero matrix) yields rank 0.
    """
    s = np.asarray(sigma, dtype=float)
    if s.ndim != 1 or s.size == 0:
        raise ValueError("sigma must be a non-empty 1-D vector")
    if rel_tol <= 0.0:
        raise ValueError(f"rel_tol must be positive, got {rel_tol}")
    if np.any(s < 0.0):
        raise ValueError("singular values must be non-negative")
    if np.any(np.diff(s) > 0.0):
        raise ValueError("sigma must be sorted non-increasing")
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > rel_tol * s[0]))


def compose(b, a) -> np.ndarray:
    """Matrix product b @ a, with an explicit dimension check."""
    b = as_matrix(b)
    a = as_matrix(a)
    if b.shape[1] != a.shape[0]:
        raise ValueError(
            f"cannot compose {b.shape} with {a.shape}: inner dimensions differ"
        )
    return b @ a
