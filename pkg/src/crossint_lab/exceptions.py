"""Structured exception classes for crossint-lab."""

import json
from typing import Any, Dict, Optional


class CrossIntLabError(Exception):
    """Base exception for all crossint-lab errors.

    Every error raised by the library derives from this class so the
    command line can map the whole hierarchy to a usage exit code.

    :param message: Human-readable error message
    :param code: Optional error code for programmatic handling
    :param details: Optional dictionary containing additional error context
    """

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        """Initialize the exception with message, code, and details."""
        super().__init__(message)
        self.message = message
        self.code = code or self.__class__.__name__
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary format.

        :return: Dictionary containing error code, message, and details
        """
        return {
            "error": self.code,
            "message": self.message,
            "details": self.details,
        }

    def to_json(self) -> str:
        """Convert exception to JSON string.

        :return: JSON-encoded string representation of the exception
        """
        return json.dumps(self.to_dict())


class ParameterError(CrossIntLabError):
    """Raised when numeric parameters are illegal.

    Covers ground sets that are too small for ℓ, canonical parameters
    outside their range, inconsistent matrix variants, rank-deficient
    matrices and search sizes above the hard cap.

    :param message: Description of the parameter problem
    :param parameter: Optional name of the offending parameter
    :param value: Optional offending value
    """

    def __init__(
        self,
        message: str,
        parameter: Optional[str] = None,
        value: Optional[Any] = None,
    ):
        """Initialize parameter error with optional parameter/value."""
        details: Dict[str, Any] = {}
        if parameter:
            details["parameter"] = parameter
        if value is not None:
            details["value"] = str(value)
        super().__init__(
            message=message, code="PARAMETER_ERROR", details=details
        )


class PreconditionError(CrossIntLabError):
    """Raised when an operation is called outside its precondition.

    :param message: Description of the violated precondition
    :param operation: Optional name of the operation
    """

    def __init__(self, message: str, operation: Optional[str] = None):
        """Initialize precondition error with optional operation name."""
        details = {}
        if operation:
            details["operation"] = operation
        super().__init__(
            message=message, code="PRECONDITION_ERROR", details=details
        )


class StructuralError(CrossIntLabError):
    """Raised when objects do not share a ground set or overflow it.

    :param message: Description of the structural problem
    :param field: Optional name of the field that failed
    """

    def __init__(self, message: str, field: Optional[str] = None):
        """Initialize structural error with optional field."""
        details = {}
        if field:
            details["field"] = field
        super().__init__(
            message=message, code="STRUCTURAL_ERROR", details=details
        )


class FormatError(CrossIntLabError):
    """Raised when a ``.fam`` document cannot be parsed.

    :param message: Description of the format error
    :param line: Optional 1-based line number
    :param path: Optional path of the offending file
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        path: Optional[str] = None,
    ):
        """Initialize format error with optional location."""
        details: Dict[str, Any] = {}
        if line is not None:
            details["line"] = line
        if path:
            details["path"] = path
        super().__init__(
            message=message, code="FORMAT_ERROR", details=details
        )
        self.line = line


class ConfigurationError(CrossIntLabError):
    """Raised for configuration-related errors.

    :param message: Description of the configuration error
    :param setting: Optional name of the problematic setting
    """

    def __init__(self, message: str, setting: Optional[str] = None):
        """Initialize configuration error with message and optional setting."""
        details = {}
        if setting:
            details["setting"] = setting
        super().__init__(
            message=message, code="CONFIGURATION_ERROR", details=details
        )
