"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: configuration problems exit
with 2, numerical failures with 3, resource-cap violations with 4.
"""


class PolarlabError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(PolarlabError):
    """Invalid or incomplete experiment configuration."""

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"config field '{field}': {message}"
        super().__init__(message)


class DomainError(PolarlabError):
    """A point or rectangle lies outside a kernel's admissible domain."""


class NumericalError(PolarlabError):
    """Base class for failures of the numerical kernels."""


class NotPSDError(NumericalError):
    """Covariance matrix is not positive semidefinite after the jitter ladder.

    Carries ``min_pivot``, the most negative pivot (equivalently the most
    negative eigenvalue) found while factorizing.
    """

    def __init__(self, message, min_pivot=None):
        self.min_pivot = min_pivot
        super().__init__(message)


class EigenConvergenceError(NumericalError):
    """Eigenvalue iteration did not converge within the sweep cap."""

    def __init__(self, message, iterations=None, dim=None, residual=None):
        self.iterations = iterations
        self.dim = dim
        self.residual = residual
        super().__init__(message)


class DegenerateAnchorError(NumericalError):
    """Conditioning anchor has (numerically) zero variance."""


class ResourceCapError(PolarlabError):
    """A configured size cap (grid points, dyadic cubes) was exceeded."""
