"""Exception hierarchy shared by every module."""


class SNError(Exception):
    """Base class for all errors raised by snbracket."""


class DimensionError(SNError, ValueError):
    """Operands live on charts of different dimension, or an index is out of range."""


class DegreeError(SNError, ValueError):
    """An operand has the wrong degree for the requested operation."""


class VarianceError(SNError, TypeError):
    """A multivector was mixed with a form where like variance is required."""


class MethodDisagreement(SNError, ArithmeticError):
    """The direct and the pairing-based bracket produced different results."""

    def __init__(self, message, direct=None, tulczyjew=None):
        super().__init__(message)
        self.direct = direct
        self.tulczyjew = tulczyjew


class PreconditionError(SNError, ValueError):
    """A checked precondition (relatedness, inverse map, nilpotency) failed."""


class ParseError(SNError, ValueError):
    """Syntax or typing error in an expression, carrying a character position."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
