"""Exception types shared across the package."""


class SixVertexError(Exception):
    """Base class for all errors raised by this package."""


class InexactDivision(SixVertexError, ArithmeticError):
    pass


class NotSymmetric(SixVertexError, ValueError):
    """A Laurent polynomial in omega is not a polynomial in omega^2 + omega^-2."""


class NonUnitLeading(SixVertexError, ZeroDivisionError):
    pass


class BadConstantTerm(SixVertexError, ValueError):
    pass


class NotReversible(SixVertexError, ValueError):
    pass


class DegreeOverflow(SixVertexError, OverflowError):
    pass


class DegreeBoundExceeded(DegreeOverflow):
    pass


class EvenDerivativeAtZero(SixVertexError, ValueError):
    pass


class GammaEqualsMinusTwo(SixVertexError, ValueError):
    pass


class CancellationFailure(SixVertexError, AssertionError):
    pass


class ParityMismatch(SixVertexError, TypeError):
    pass


class NoStabilization(SixVertexError, RuntimeError):
    pass


class ExpressionsDisagree(SixVertexError, AssertionError):
    pass


class SizeLimitExceeded(SixVertexError, ValueError):
    pass


class ConventionViolation(SixVertexError, AssertionError):
    pass


class NotColourful(SixVertexError, ValueError):
    pass


class BadParameter(SixVertexError, ValueError):
    pass


class IncompatibleRoute(SixVertexError, ValueError):
    pass
