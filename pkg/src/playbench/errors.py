"""Exception types shared across the engine and its frontends.

Every error the library raises on purpose derives from PlaybenchError, so
frontends can map the four categories onto their own status codes without
string matching.
"""

from __future__ import annotations


class PlaybenchError(Exception):
    """Base class for all deliberate playbench errors."""

    code = "error"


class ValidationError(PlaybenchError):
    """A configuration or argument value is out of range or inconsistent.

    ``fields`` names the offending parameters so callers can point at them.
    """

    code = "invalid_config"

    def __init__(self, message: str, fields: tuple[str, ...] = ()):
        super().__init__(message)
        self.fields = tuple(fields)


class NotFoundError(PlaybenchError):
    """A referenced session id does not exist."""

    code = "not_found"


class StateError(PlaybenchError):
    """The operation is not legal in the session's current status."""

    code = "state_error"


class UnsupportedError(PlaybenchError):
    """The operation never applies to this kind of session."""

    code = "unsupported"
