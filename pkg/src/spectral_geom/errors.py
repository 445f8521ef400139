"""Exception types shared across the package.

ValueError is used for plain contract violations (bad shapes, unsorted
input, malformed files); the classes below mark failures that callers may
want to branch on, e.g. for CLI exit codes.
"""


class SpectralGeomError(Exception):
    """Base class for all package-specific failures."""


class DomainError(SpectralGeomError):
    """Input is outside the mathematical domain of the operation.

    Raised for the zero operator (no spectral state), an annihilating
    composition (BA = 0), and transport denominators that vanish.
    """


class BoundaryError(SpectralGeomError):
    """A boundary state was passed where a strictly interior one is required.

    The simplex boundary carries no metric tensor, so metric, geodesic and
    embedding operations reject states with vanishing coordinates.
    """


class ConvergenceError(SpectralGeomError):
    """An iterative routine exhausted its sweep budget without converging."""
