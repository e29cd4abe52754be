"""Exception types raised across the package."""

from __future__ import annotations


class QGAError(Exception):
    """Base class for all errors raised by qga."""


class ParseError(QGAError):
    """The algebra document is not well-formed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ValidationError(QGAError):
    """The input is well-formed but violates a structural invariant or precondition."""


class InfiniteObjectError(QGAError):
    """An unbounded result was requested for an object that is infinite."""
