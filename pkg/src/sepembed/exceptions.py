"""Exception hierarchy.

Every error carries a short machine-parsable ``reason`` code which the CLI
prints next to the message.
"""


class SepembedError(Exception):
    reason = "error"


class PolynomialParseError(SepembedError, ValueError):
    """Raised on malformed polynomial text; ``pos`` is a 0-based offset."""

    reason = "parse-error"

    def __init__(self, message, text="", pos=0):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.text = text
        self.pos = pos


class UnknownVariableError(PolynomialParseError):
    reason = "unknown-variable"


class ExponentOverflowError(PolynomialParseError):
    reason = "exponent-overflow"


class ProblemFileError(SepembedError, ValueError):
    """Malformed problem file; ``line`` is 1-based, ``pos`` a 0-based column."""

    reason = "problem-file"

    def __init__(self, message, line=0, pos=None):
        where = f"line {line}" if line else ""
        if line and pos is not None:
            where += f", position {pos}"
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.pos = pos


class RingMismatchError(SepembedError, ValueError):
    reason = "ring-mismatch"


class ZeroPolynomialError(SepembedError, ValueError):
    reason = "zero-polynomial"


class MathError(SepembedError):
    """Base for errors that signal a mathematical precondition failure."""

    reason = "math-error"


class UnitIdealError(MathError):
    reason = "unit-ideal"


class NotContainedInMaximalIdealError(MathError):
    reason = "not-in-maximal-ideal"

    def __init__(self, message, generator=None):
        super().__init__(message)
        self.generator = generator


class ZNotInLinearPartError(MathError):
    reason = "z-not-in-linear-part"


class NoSeparatingTupleError(MathError):
    reason = "no-separating-tuple"


class MarkingInconsistentError(MathError):
    reason = "marking-inconsistent"


class FlipOnBoundaryError(MathError):
    reason = "flip-on-boundary"


class CapExceededError(SepembedError):
    reason = "cap-exceeded"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
