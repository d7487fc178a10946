"""Exception hierarchy.

Errors fall in two families.  ``CartQECError`` subclasses signal bad input
(wrong shapes, out-of-range exponents, caps exceeded).  ``HypothesisError``
subclasses signal that a construction is not applicable to the requested
parameters, e.g. the code does not contain its dual.
"""


class CartQECError(ValueError):
    pass


class HypothesisError(CartQECError):
    """A construction's hypothesis fails for the given parameters."""


class CompositeP(CartQECError):
    pass


class TooLarge(CartQECError):
    pass


class NotADivisor(CartQECError):
    pass


class LengthMismatch(CartQECError):
    pass


class OutOfRange(CartQECError):
    pass


class BadSpec(CartQECError):
    pass


class IncompatibleAmbient(CartQECError):
    pass


class RenderCap(CartQECError):
    pass


class BoundUndefined(CartQECError):
    pass


class ParityViolation(CartQECError):
    pass


class BadRange(CartQECError):
    pass


class KTooSmall(CartQECError):
    pass


class BadDelta(HypothesisError):
    pass


class EmptyCode(HypothesisError):
    pass


class NotDualContaining(HypothesisError):
    pass


class EnlargementTooSmall(HypothesisError):
    pass


class ConsistencyError(AssertionError):
    """Raised when a derived code violates a bound it provably satisfies."""
