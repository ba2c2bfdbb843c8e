"""
Custom exceptions for cliquetensor.
"""
from typing import Any, Dict, Optional


class CliqueTensorException(Exception):
    """Base exception for cliquetensor; carries the process exit code."""

    def __init__(
        self,
        message: str,
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class ArgumentError(CliqueTensorException):
    """Raised when an operation precondition is violated."""

    def __init__(self, message: str = "Invalid argument", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, exit_code=2, details=details)


class CapacityError(CliqueTensorException):
    """Raised when a graph exceeds what an operation supports."""

    def __init__(self, message: str = "Capacity exceeded", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, exit_code=2, details=details)


class Graph6ParseError(CliqueTensorException):
    """Raised on malformed graph6 input."""

    def __init__(self, message: str, offset: int, details: Optional[Dict[str, Any]] = None):
        self.offset = offset
        merged = {"offset": offset, **(details or {})}
        super().__init__(f"{message} (byte offset {offset})", exit_code=2, details=merged)


class PopulationError(CliqueTensorException):
    """Raised when a graph population cannot be read."""

    def __init__(self, message: str = "Population error", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, exit_code=2, details=details)


class VerificationFailure(CliqueTensorException):
    """Raised when a verification check does not pass; ``report`` is still emitted."""

    def __init__(
        self,
        message: str = "Verification failed",
        report: Any = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.report = report
        super().__init__(message, exit_code=1, details=details)
