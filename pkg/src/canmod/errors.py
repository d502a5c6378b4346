"""Exception types shared by the engine, the classifier and the CLI."""

from __future__ import annotations


class CanmodError(Exception):
    """Base class for all errors raised by canmod."""


class RingMismatchError(CanmodError, ValueError):
    """Operands live in different rings or free modules of different rank."""


class ResourceExceeded(CanmodError):
    """A computation hit its step or length cap.

    ``partial`` carries whatever was finished before the cap was reached
    (for resolutions: the matrices computed so far).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class PreconditionError(CanmodError, ValueError):
    """An operation was called outside its documented domain."""

    def __init__(self, message: str, kind: str = "precondition"):
        super().__init__(message)
        self.kind = kind


class ParseError(CanmodError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
