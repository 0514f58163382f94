"""Exception hierarchy shared by all solver modules."""


class VecconError(Exception):
    """Base class for all errors raised by this package."""


class InputError(VecconError, ValueError):
    """A caller violated an operation's precondition (bad vertex id, wrong
    graph class, malformed argument)."""


class SizeLimitError(VecconError):
    """An exhaustive oracle was invoked on an instance larger than its cap.

    The cap can be raised via the VECCON_BRUTE_CAP environment variable.
    """


class BlockTypeError(InputError):
    """A block-structured solver met a block outside its supported families."""


class ParseError(VecconError, ValueError):
    """A file could not be parsed; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
