"""Exception types shared across the package."""


class UsageError(ValueError):
    """Arguments are structurally invalid (mismatched orders, bad indices)."""


class DomainError(ValueError):
    """Arguments fall outside the domain where a formula is defined."""


class SingularSeriesError(ZeroDivisionError):
    """A formal series with zero constant term was inverted."""


class UnsupportedNormalizationError(ValueError):
    """A series operation needs a normalized constant term that is missing."""


class EvaluationError(ArithmeticError):
    """A numeric evaluation produced a non-finite value."""
