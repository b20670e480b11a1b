"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for numerical algebra failures."""


class ZeroDivisorError(AlgebraError):
    """A ring element with a vanishing C+C projection was inverted.

    Idempotents and their multiples are the typical culprits: they are
    zero divisors, so no inverse exists.
    """


class SingularError(AlgebraError):
    """A multivector whose 4x4 matrix representation is singular was
    inverted (it is a zero divisor in the algebra)."""


class NullStateError(AlgebraError):
    """The complex sphere vector squares to zero, so no unit vector and
    no spin axis can be extracted from it."""


class DegenerateBoostError(AlgebraError):
    """The sphere vector does not admit the hyperbolic two-vector
    decomposition (square not real positive, or parts inconsistent)."""


class EvalError(AlgebraError):
    """Expression evaluated to an invalid operation (CLI layer)."""


class ParseError(Exception):
    """Syntax error in the expression language.

    Attributes:
        offset: byte offset of the failure in the input string.
        expected: tuple of token descriptions that would have been legal.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(expected)
