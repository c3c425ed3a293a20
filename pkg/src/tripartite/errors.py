"""Exception types raised across the package."""


class TripartiteError(Exception):
    """Base class for all package errors."""


class NotPrime(TripartiteError, ValueError):
    pass


class NotPrimePower(TripartiteError, ValueError):
    pass


class TooLarge(TripartiteError, ValueError):
    pass


class DivisionByZero(TripartiteError, ZeroDivisionError):
    pass


class BadS(TripartiteError, ValueError):
    pass


class BadQ(TripartiteError, ValueError):
    pass


class BadArgs(TripartiteError, ValueError):
    pass


class BadPartition(TripartiteError, ValueError):
    pass


class SizeMismatch(TripartiteError, ValueError):
    pass


class BaseNotFree(TripartiteError, ValueError):
    def __init__(self, s, witness=None):
        super().__init__(f"base graph contains K2({s})")
        self.s = s
        self.witness = witness


class ParseError(TripartiteError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotFound(TripartiteError, LookupError):
    """No copy of the requested subgraph exists in the host graph."""
