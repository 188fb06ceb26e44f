"""Exception hierarchy.

Validation errors mean the requested component does not exist or is outside
the smooth case; internal errors mean a computed quantity broke an identity
that must hold, and point to a bug rather than bad input.
"""


class U21Error(Exception):
    """Base class for all errors raised by the package."""


class ValidationError(U21Error, ValueError):
    pass


class GenusTooSmall(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class ToledoViolated(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class TruncationExceeded(U21Error, IndexError):
    pass


class InternalError(U21Error, ArithmeticError):
    pass


class NonZeroRemainder(InternalError):
    pass


class NegativeCoefficient(InternalError):
    pass


class EulerMismatch(InternalError):
    pass
