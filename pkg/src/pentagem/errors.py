"""Exception types shared across the package."""

from __future__ import annotations


class PentagemError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(PentagemError):
    """Input file or graph description could not be parsed."""


class PreconditionError(PentagemError):
    """An operation was called outside its documented contract."""


class ForbiddenPatternError(PreconditionError):
    """Input is not (P5, gem)-free; carries the violating witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DegreeRangeError(PreconditionError):
    """Maximum degree outside the range an operation supports."""


class CliqueBoundError(PreconditionError):
    """Clique number too large for the requested coloring bound."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class OracleCapExceeded(PentagemError):
    """Exact-chromatic search refused: instance above the configured cap."""


class InternalInconsistencyError(PentagemError):
    """A state the underlying theory rules out was reached; indicates a bug
    or a corrupted certificate, never a property of a valid input."""
