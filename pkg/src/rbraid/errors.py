"""Exception hierarchy shared by all rbraid modules."""


class RBraidError(Exception):
    """Base class for every error raised by this package."""


# -- scalar layer -----------------------------------------------------------

class DescriptorMismatch(RBraidError):
    """Two values from different base fields were combined."""


class DivisionByZero(RBraidError, ZeroDivisionError):
    """Division or inversion of a zero field element."""


class ParseError(RBraidError, ValueError):
    """Malformed scalar string or algebra definition file."""


# -- shapes and containers --------------------------------------------------

class ShapeMismatch(RBraidError):
    """Dimensions of a matrix, table or vector are inconsistent."""


class NotSquare(RBraidError):
    """A square matrix was required."""


class AlgebraMismatch(RBraidError):
    """Operands belong to different algebras."""


class FieldMismatch(RBraidError):
    """Two algebras over different base fields were combined."""


class ArityMismatch(RBraidError):
    """Tensor operands have different numbers of legs."""


class LegOutOfRange(RBraidError, IndexError):
    """A tensor leg index is outside 1..arity."""


class BadPermutation(RBraidError, ValueError):
    """Not a permutation of the tensor legs."""


class BadSlots(RBraidError, ValueError):
    """Invalid slot list for a leg embedding."""


# -- algebra builders -------------------------------------------------------

class CharacteristicTwo(RBraidError):
    """Quaternion algebras need 2 to be invertible in the base field."""


class NonInvertibleParameter(RBraidError):
    """A builder parameter that must be invertible is zero."""


class NonMonicModulus(RBraidError):
    """Polynomial quotient modulus is not monic of degree >= 1."""


# -- solver and certificates ------------------------------------------------

class UnvalidatedAlgebra(RBraidError):
    """The algebra failed (or never ran) structural validation."""


class NonUniqueSolution(RBraidError):
    """The normalization system has a positive-dimensional solution set.

    Over a field this contradicts uniqueness of the braiding, so it is
    reported as an internal-consistency failure, never resolved by a
    tie-break.
    """


class UnverifiedCertificate(RBraidError):
    """An operation required a certificate whose checks all pass."""


class NotWellDefined(RBraidError):
    """An induced map does not send relations into relations."""


class UnsupportedSize(RBraidError):
    """Input exceeds the default size cap (lift with force/--force)."""
