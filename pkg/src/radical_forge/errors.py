class DomainError(ValueError):
    """Input outside the domain of an operation."""


class PrecisionExhausted(ArithmeticError):
    """An interval became too wide to decide or report a result."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InconsistentTower(ArithmeticError):
    """A radicand interval lies entirely below zero."""
