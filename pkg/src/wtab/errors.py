"""Exception types raised by wtab."""


class WtabError(Exception):
    """Base class for all wtab errors."""


class NotEvenMultiplicity(WtabError, ValueError):
    pass


class InvalidForType(WtabError, ValueError):
    pass


class SizeMismatch(WtabError, ValueError):
    pass


class InvalidFrame(WtabError, ValueError):
    pass


class MixedParity(WtabError, ValueError):
    pass


class NotRowSorted(WtabError, ValueError):
    pass


class BadIndex(WtabError, IndexError):
    pass


class NotJustified(WtabError, ValueError):
    pass


class NotConvex(WtabError, ValueError):
    pass


class MixedRowParity(WtabError, ValueError):
    pass


class LengthMismatch(WtabError, ValueError):
    pass


class BoundExceeded(WtabError, ValueError):
    pass


class NonIntegralWeight(WtabError, ValueError):
    pass


class NotNegationClosed(WtabError, ValueError):
    pass


class VeryEvenUnsupported(WtabError, NotImplementedError):
    pass


class SharpUndefined(WtabError, ValueError):
    pass


class SwapUndefined(WtabError, ValueError):
    """A row swap needed by a generator is not defined.

    ``step`` names the swap that failed, e.g. ``"s_2"``.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class ParseError(WtabError, ValueError):
    def __init__(self, message, line=None, col=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col})" if col is not None else ")")
        super().__init__(message + where)
        self.line = line
        self.col = col
