"""Composition of operators seen through their spectral states.

Two layers of results live here. Rank monotonicity and boundary attraction
hold for every composition BA and are exposed through analyze_composition.
The transport map on states exists only under SVD alignment (stage B's
right singular subspaces match stage A's left ones); aligned_transport
implements that re-weighting, and stage_is_isometry / distortion_profile
classify when it preserves Fisher-Rao distances (exactly when the stage
spectrum is uniform).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundaryError, DomainError
from .geometry import INTERIOR_MIN, fr_distance
from .linalg import as_matrix, compose, default_rank_tol, numerical_rank, svd
from .spectral import FaceDescriptor, as_state, face_of, state_from_spectrum

# Composition counts as annihilating below this relative product norm.
ANNIHILATION_RTOL = 1e-14
# Frobenius tolerance on projector differences when testing alignment.
ALIGNMENT_TOL = 1e-8
# Relative gap under which consecutive singular values share a group.
GROUP_TOL = 1e-8


@dataclass(frozen=True)
class CompositionReport:
    """Spectral summary of a composed pair (B, A)."""

    state_a: np.ndarray
    state_b: np.ndarray
    state_ba: np.ndarray
    rank_a: int
    rank_b: int
    rank_ba: int
    face_ba: FaceDescriptor
    aligned: bool
    alignment_residual: float
    isometric_stage: bool


def as_stage_spectrum(beta) -> np.ndarray:
    """Validate a stage spectrum: non-negative, finite, not all zero.

    Spectra read off an operator's SVD are sorted non-increasing by
    construction; raw weight vectors are also accepted here and paired
    with state coordinates by index.
    """
    beta = np.asarray(beta, dtype=float)
    if beta.ndim != 1 or beta.size == 0:
        raise ValueError("stage spectrum must be a non-empty 1-D vector")
    if not np.all(np.isfinite(beta)):
        raise ValueError("stage spectrum entries must be finite")
    if np.any(beta < 0.0):
        raise ValueError("stage spectrum entries must be non-negative")
    if np.max(beta) == 0.0:
        raise ValueError("stage spectrum must have at least one positive entry")
    return beta


def _sigma_groups(sigma: np.ndarray, upto: int) -> list[np.ndarray]:
    """Split indices 0..upto-1 into runs of (near-)equal singular values."""
    if upto == 0:
        return []
    scale = sigma[0] if sigma[0] > 0.0 else 1.0
    breaks = np.flatnonzero(np.abs(np.diff(sigma[:upto])) > GROUP_TOL * scale) + 1
    return np.split(np.arange(upto), breaks)


def is_svd_aligned(b, a, tol: float = ALIGNMENT_TOL) -> tuple[bool, float]:
    """Test whether some SVD of B has right singular vectors equal to A's
    left singular vectors.

    Singular vectors are only determined up to rotation inside groups of
    equal singular values, so the test works on subspaces rather than on
    the arbitrary per-vector choices an SVD routine makes. Alignment holds
    exactly when (i) B.T @ B leaves each left-singular eigenspace of A
    invariant and (ii) the stage spectrum paired with those eigenspaces is
    non-increasing along A's descending spectrum, i.e. sorting B's
    singular values never crosses A's. The returned residual is the worst
    relative defect over both conditions (Frobenius leakage out of each
    subspace plus any ordering violation), 0 for exact alignment; the pair
    counts as aligned when it stays within tol. A spectrally uniform stage
    (e.g. the identity) is aligned with every A.
    """
    b = as_matrix(b)
    a = as_matrix(a)
    if b.shape[1] != a.shape[0]:
        raise ValueError(
            f"cannot compose {b.shape} with {a.shape}: inner dimensions differ"
        )
    sv_a = svd(a)
    u_a, sigma_a = sv_a.u, sv_a.sigma
    k_a = u_a.shape[1]
    btb = b.T @ b
    scale = float(svd(b).sigma[0]) ** 2
    if scale == 0.0:
        return True, 0.0

    residual = 0.0
    paired = []  # squared stage spectrum paired with A's eigenspaces
    for group in _sigma_groups(sigma_a, k_a):
        basis = u_a[:, group]
        image = btb @ basis
        leak = image - basis @ (basis.T @ image)
        residual = max(residual, float(np.linalg.norm(leak)) / scale)
        paired.extend(sorted((svd(b @ basis).sigma ** 2).tolist(), reverse=True))

    # Eigenvalues of B.T @ B on the complement of A's left vectors (thin A).
    d = b.shape[1]
    if k_a < d:
        complement = np.linalg.qr(u_a, mode="complete")[0][:, k_a:]
        outside = svd(b @ complement).sigma ** 2
        if outside.size and paired:
            residual = max(residual, (float(outside[0]) - paired[-1]) / scale)

    ordering_violation = float(np.max(np.diff(paired), initial=0.0))
    residual = max(residual, ordering_violation / scale)
    return residual <= tol, residual


def aligned_transport(lambda_a, beta, strict: bool = False) -> np.ndarray:
    """Re-weight a state by a stage spectrum: beta_i^2 lam_i, renormalised.

    This is the state of BA predicted from the state of A when the stages
    are SVD-aligned. The closed form assumes full support; by default the
    map is extended continuously to supported states whenever the
    denominator stays positive, while strict=True enforces the
    full-support hypothesis and raises BoundaryError otherwise. A zero
    denominator means the stage annihilates all of the state's mass.
    """
    lam = as_state(lambda_a)
    beta = as_stage_spectrum(beta)
    if beta.size != lam.size:
        raise ValueError(
            f"stage spectrum length {beta.size} does not match state length "
            f"{lam.size}"
        )
    if strict and np.min(lam) <= INTERIOR_MIN:
        raise BoundaryError(
            "strict aligned transport requires a full-support state"
        )
    weights = beta**2 * lam
    total = weights.sum()
    if total <= 0.0:
        raise DomainError(
            "aligned transport annihilates the state: the stage spectrum "
            "vanishes on its entire support"
        )
    return weights / total


def stage_is_isometry(beta, tol: float) -> bool:
    """True iff the stage spectrum is uniform within relative spread tol."""
    beta = as_stage_spectrum(beta)
    spread = float(np.max(beta) - np.min(beta))
    return spread <= tol * float(np.max(beta))


def distortion_profile(beta, pairs) -> list[tuple[float, float]]:
    """Fisher-Rao distances before and after transport, per state pair.

    The stage spectrum must be strictly positive and every state interior;
    a uniform spectrum leaves each pair's distance unchanged, any other
    spectrum distorts at least some of them.
    """
    beta = as_stage_spectrum(beta)
    if np.min(beta) <= 0.0:
        raise ValueError("distortion profile requires a strictly positive spectrum")
    profile = []
    for first, second in pairs:
        first = as_state(first)
        second = as_state(second)
        if min(np.min(first), np.min(second)) <= INTERIOR_MIN:
            raise BoundaryError("distortion profile requires interior states")
        d_before = fr_distance(first, second)
        d_after = fr_distance(
            aligned_transport(first, beta), aligned_transport(second, beta)
        )
        profile.append((d_before, d_after))
    return profile


def _uniform_on_support(sigma: np.ndarray, rank_tol: float, tol: float) -> bool:
    support = sigma[sigma > rank_tol * sigma[0]] if sigma[0] > 0.0 else sigma[:0]
    if support.size == 0:
        return False
    spread = float(support[0] - support[-1])
    return spread <= tol * float(support[0])


def analyze_composition(b, a, n: int, tol: float = ALIGNMENT_TOL) -> CompositionReport:
    """Full spectral report on the composition BA.

    Computes BA at matrix level, the three spectral states on the common
    length-n simplex, numerical ranks at the default cutoff, the face of
    lambda(BA), the SVD-alignment status (tolerance tol on projector
    residuals) and whether stage B is spectrally uniform on its support
    within tol. A composition with ||BA|| below 1e-14 ||B|| ||A|| counts
    as annihilating and has no spectral state.
    """
    b = as_matrix(b)
    a = as_matrix(a)
    ba = compose(b, a)
    norm_ba = np.linalg.norm(ba)
    if norm_ba <= ANNIHILATION_RTOL * np.linalg.norm(b) * np.linalg.norm(a):
        raise DomainError(
            "lambda(BA) undefined: the composition annihilates (BA = 0)"
        )
    sv_a = svd(a)
    sv_b = svd(b)
    sv_ba = svd(ba)
    state_a = state_from_spectrum(sv_a.sigma, n)
    state_b = state_from_spectrum(sv_b.sigma, n)
    state_ba = state_from_spectrum(sv_ba.sigma, n)
    aligned, residual = is_svd_aligned(b, a, tol)
    return CompositionReport(
        state_a=state_a,
        state_b=state_b,
        state_ba=state_ba,
        rank_a=numerical_rank(sv_a.sigma, default_rank_tol(*a.shape)),
        rank_b=numerical_rank(sv_b.sigma, default_rank_tol(*b.shape)),
        rank_ba=numerical_rank(sv_ba.sigma, default_rank_tol(*ba.shape)),
        face_ba=face_of(state_ba),
        aligned=aligned,
        alignment_residual=residual,
        isometric_stage=_uniform_on_support(
            sv_b.sigma, default_rank_tol(*b.shape), tol
        ),
    )
