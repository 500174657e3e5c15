"""Exception hierarchy shared by the engine and the CLI."""


class IsospectralError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(IsospectralError, ValueError):
    """Family or deformation parameters violate a validity rule."""


class DomainError(IsospectralError, ValueError):
    """A coordinate lies outside the open physical domain."""


class BoundStateIndexError(IsospectralError, IndexError):
    """Requested state index is not a bound state of the potential."""


class NumericalError(IsospectralError, ArithmeticError):
    """Base for numerical failures (CLI exit code 3)."""


class SingularityError(NumericalError):
    """A denominator vanishes (to within threshold) at the reported location."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class QuadratureError(NumericalError):
    """Adaptive or composite quadrature could not reach the requested tolerance."""


class ConvergenceError(NumericalError):
    """Eigenvalue extrapolation did not converge to the requested tolerance."""


class SpuriousEigenvalueError(NumericalError):
    """A clearly negative eigenvalue appeared; usually a domain-truncation artifact."""
