"""Exception types shared across the toolkit."""


class GlsError(Exception):
    """Base class for all toolkit errors."""


class DomainError(GlsError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(GlsError, ValueError):
    """A structural precondition (grid span, endpoint positivity, ...) fails."""


class EvaluationError(GlsError, ArithmeticError):
    """An integrand or profile evaluated to a non-finite value.

    Carries the offending node and the value seen there, so callers can
    distinguish a legitimate +inf (infinite norm) from NaN poisoning.
    """

    def __init__(self, message, node=None, value=None):
        super().__init__(message)
        self.node = node
        self.value = value


class ConvergenceError(GlsError, RuntimeError):
    """Adaptive quadrature did not reach tolerance within the panel budget.

    ``best_estimate`` and ``error_estimate`` hold the last (best) state.
    """

    def __init__(self, message, best_estimate=None, error_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class ConfigError(GlsError, ValueError):
    """Configuration document rejected; ``path`` points at the offending key."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
