"""Exception types shared across the package."""


class LerchError(Exception):
    """Base class for all numerical-domain failures raised here."""


class DomainError(LerchError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Argument on (or too close to) a pole of the target function."""


class ConvergenceError(LerchError, ArithmeticError):
    """An iterative evaluation hit its work cap before reaching tolerance."""

    def __init__(self, message, work=0):
        super().__init__(message)
        self.work = work
