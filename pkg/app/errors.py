"""
Exception hierarchy for the ideal classification engine.
"""

from typing import Optional


class IdealLabError(Exception):
    """Base class for all library errors."""


class BackendMismatchError(IdealLabError, ValueError):
    """An element or ideal was used with a ring of another backend."""


class ParseError(IdealLabError, ValueError):
    """A ring, element, ideal, hom or localization spec could not be parsed."""

    def __init__(self, message: str, token: Optional[str] = None):
        self.token = token
        if token is not None:
            message = f"{message} (offending token: {token!r})"
        super().__init__(message)


class NotProperError(IdealLabError, ValueError):
    """The operation requires a proper ideal."""


class UnsupportedOperationError(IdealLabError):
    """The backend cannot decide this query exactly."""


class PreconditionError(IdealLabError):
    """A theorem hypothesis or constructor precondition does not hold."""

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)


class ScopeError(IdealLabError, ValueError):
    """A verification or enumeration scope is unbounded or out of range."""
