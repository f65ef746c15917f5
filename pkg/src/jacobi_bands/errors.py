"""Exception types raised across the package."""


class JacobiBandsError(Exception):
    """Base class for all package errors."""


class ValidationError(JacobiBandsError, ValueError):
    """Input data failed a precondition."""


class ShapeMismatch(ValidationError):
    pass


class NonFiniteEntry(ValidationError):
    pass


class UnsupportedPeriod(ValidationError):
    pass


class UnsupportedSize(ValidationError):
    pass


class NonHermitianInput(ValidationError):
    pass


class NotSchroedinger(ValidationError):
    pass


class IndexOutOfRange(JacobiBandsError, IndexError):
    pass


class ConvergenceFailure(JacobiBandsError, RuntimeError):
    pass


class BudgetExceeded(JacobiBandsError, RuntimeError):
    """Grid refinement hit its size cap before the edges settled."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
