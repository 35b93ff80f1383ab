"""Exception types shared across the package."""


class ConstacodeError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(ConstacodeError):
    """Multiplicative inverse of the zero field element."""


class NotFound(ConstacodeError):
    """An exhaustive search came up empty (internal assertion)."""


class NotAUnit(ConstacodeError):
    """Inverse of a ring element a+ub with a = 0."""


class DivisionByZeroPoly(ConstacodeError):
    """Polynomial division by the zero polynomial."""


class NonUnitLeadingCoeff(ConstacodeError):
    """Polynomial division by a divisor whose leading coefficient is not a unit."""


class NonUnitConstantTerm(ConstacodeError):
    """Reciprocal of a polynomial whose constant term is not a unit."""


class EvenLength(ConstacodeError):
    """Operation defined for odd lengths only."""


class NotAFactor(ConstacodeError):
    """Polynomial does not divide x^n - 1."""


class NotMonic(ConstacodeError):
    """A monic polynomial was required."""


class BadFactorization(ConstacodeError):
    """f*g*h does not equal x^n - (1+u)."""


class NotCoprime(ConstacodeError):
    """The given polynomials share a nontrivial common divisor."""


class RankMismatch(ConstacodeError):
    """Generator matrix rank disagrees with the code cardinality."""


class LengthMismatch(ConstacodeError):
    """Words of different (or wrong) lengths."""


class BadBlocking(ConstacodeError):
    """Bit word length does not split into the required blocks."""


class EvenLengthUnsupported(ConstacodeError):
    """Block permutation is only defined for odd n."""


class TooLarge(ConstacodeError):
    """Enumeration would exceed the configured guard."""


class ZeroCode(ConstacodeError):
    """The zero code has no nonzero codeword, so no minimum distance."""


class NotDualContaining(ConstacodeError):
    """The code does not contain its dual."""
