"""Exception hierarchy shared by all varcomp modules."""


class VarcompError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(VarcompError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class MomentUndefinedError(DomainError):
    """A requested moment does not exist for the given parameters.

    The F(d1, d2) mean requires d2 > 2 and the variance requires d2 > 4.
    """


class ConvergenceError(VarcompError, ArithmeticError):
    """An iterative scheme hit its iteration cap before reaching tolerance.

    Raised instead of returning a degraded value: verification results must
    never be certified from numerics that did not converge.
    """


class ToleranceNotMetError(ConvergenceError):
    """A quadrature could not reach the requested tolerance.

    Carries the best value obtained so far and the estimated error bound.
    """

    def __init__(self, message, value=None, error_bound=None):
        super().__init__(message)
        self.value = value
        self.error_bound = error_bound
