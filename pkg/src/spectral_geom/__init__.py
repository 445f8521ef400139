"""Fisher-Rao geometry of normalised singular spectra.

Real matrices are mapped to spectral states (normalised squared singular
values) on the probability simplex, which carries the Fisher-Rao metric:
closed-form distances and geodesics, a square-root embedding onto the
sphere, Shannon entropy, and a composition calculus with rank laws and an
aligned transport model. See the demos/ directory for guided tours and
the `spectral-geom` CLI for file-based use.
"""

from .composition import (
    CompositionReport,
    aligned_transport,
    analyze_composition,
    as_stage_spectrum,
    distortion_profile,
    is_svd_aligned,
    stage_is_isometry,
)
from .errors import (
    BoundaryError,
    ConvergenceError,
    DomainError,
    SpectralGeomError,
)
from .geometry import (
    GeodesicPath,
    entropy,
    fr_distance,
    geodesic,
    metric_tensor,
    path_length,
    sphere_embed,
    triangle_excess,
)
from .linalg import (
    SvdResult,
    as_matrix,
    compose,
    default_rank_tol,
    numerical_rank,
    random_unitary,
    svd,
)
from .spectral import (
    FaceDescriptor,
    as_state,
    check_scale_invariance,
    check_unitary_invariance,
    face_of,
    spectral_state,
    spectrally_equivalent,
    state_from_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryError",
    "CompositionReport",
    "ConvergenceError",
    "DomainError",
    "FaceDescriptor",
    "GeodesicPath",
    "SpectralGeomError",
    "SvdResult",
    "aligned_transport",
    "analyze_composition",
    "as_matrix",
    "as_stage_spectrum",
    "as_state",
    "check_scale_invariance",
    "check_unitary_invariance",
    "compose",
    "default_rank_tol",
    "distortion_profile",
    "entropy",
    "face_of",
    "fr_distance",
    "geodesic",
    "is_svd_aligned",
    "metric_tensor",
    "numerical_rank",
    "path_length",
    "random_unitary",
    "sphere_embed",
    "spectral_state",
    "spectrally_equivalent",
    "stage_is_isometry",
    "state_from_spectrum",
    "svd",
    "triangle_excess",
]
