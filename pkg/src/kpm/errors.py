"""Exception hierarchy shared by every module."""


class KPMError(Exception):
    """Base class for all library errors."""


class MalformedInputError(KPMError, ValueError):
    """Input has the wrong shape, mixes scalar rings, or cannot be parsed."""


class SingularInputError(KPMError, ArithmeticError):
    pass


class TruncationTooSmallError(KPMError):
    """A truncation order was too small for the computation to be certified.

    Callers are expected to retry with a larger order.
    """


class InvalidDataError(KPMError, ValueError):
    """ADHM data violating the quadratic relation."""


class DegenerateDataError(KPMError):
    """Monad maps drop rank somewhere they must not."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class GeneratorExhaustedError(KPMError):
    pass


class ConsistencyError(KPMError, AssertionError):
    """Two independent routes to the same quantity disagreed."""
