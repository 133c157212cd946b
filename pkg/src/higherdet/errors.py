"""Exception types shared by every module."""


class HDetError(Exception):
    """Base class for all errors raised by the package."""


class PoleError(HDetError, ZeroDivisionError):
    """The requested point is a pole of the function."""


class DomainError(HDetError, ValueError):
    """The argument lies outside the supported evaluation domain."""


class BranchCutError(DomainError):
    """The argument lies on a branch cut of a logarithm."""


class AccuracyError(HDetError, ArithmeticError):
    """A numerical method failed to reach its target accuracy.

    The best available estimate and its error indicator are attached as
    ``estimate`` and ``error``.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
