"""
Centralized error handling for the command-line surface
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .base_exceptions import (
    HyperspaceError, TreeValidationError, ComplexError, InvariantViolation,
    InputFormatError, ConfigurationError
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class ErrorSeverity(Enum):
    """Error severity levels"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


@dataclass
class ErrorContext:
    """Context information for error handling"""
    command: Optional[str] = None
    input_path: Optional[str] = None


@dataclass
class ErrorResponse:
    """One-line diagnostic and exit code for a failed command"""
    message: str
    exit_code: int
    severity: ErrorSeverity


class ErrorHandler:
    """Maps toolkit exceptions onto diagnostics and exit codes"""

    def handle_error(self, error: Exception, context: ErrorContext) -> ErrorResponse:
        """
        Handle any error and return the diagnostic to print

        Args:
            error: The exception that occurred
            context: Context information about the command

        Returns:
            ErrorResponse with a one-line message and the process exit code
        """
        response = self._classify(error, context)
        self._log_error(error, context, response)
        return response

    def _classify(self, error: Exception, context: ErrorContext) -> ErrorResponse:
        if isinstance(error, InvariantViolation):
            return ErrorResponse(
                message=f"internal error [{error.error_code}]: {error}. {error.user_message}",
                exit_code=EXIT_CHECK_FAILED,
                severity=ErrorSeverity.CRITICAL
            )

        if isinstance(error, ConfigurationError):
            return ErrorResponse(
                message=f"configuration error [{error.error_code}]: {error}",
                exit_code=EXIT_INPUT_ERROR,
                severity=ErrorSeverity.HIGH
            )

        if isinstance(error, (TreeValidationError, ComplexError, InputFormatError)):
            prefix = f"{context.input_path}: " if context.input_path else ""
            return ErrorResponse(
                message=f"{prefix}{error.error_code}: {error}",
                exit_code=EXIT_INPUT_ERROR,
                severity=ErrorSeverity.LOW
            )

        if isinstance(error, HyperspaceError):
            return ErrorResponse(
                message=f"{error.error_code or 'ERROR'}: {error}",
                exit_code=EXIT_CHECK_FAILED,
                severity=ErrorSeverity.MEDIUM
            )

        if isinstance(error, (FileNotFoundError, IsADirectoryError, PermissionError)):
            return ErrorResponse(
                message=f"cannot read input: {error}",
                exit_code=EXIT_INPUT_ERROR,
                severity=ErrorSeverity.LOW
            )

        return ErrorResponse(
            message=f"unexpected error: {type(error).__name__}: {error}",
            exit_code=EXIT_CHECK_FAILED,
            severity=ErrorSeverity.CRITICAL
        )

    def _log_error(self, error: Exception, context: ErrorContext, response: ErrorResponse) -> None:
        log_data = {
            "command": context.command,
            "input_path": context.input_path,
            "error_type": type(error).__name__,
            "severity": response.severity.value,
        }
        if isinstance(error, HyperspaceError):
            log_data["error_code"] = error.error_code
            log_data["context"] = error.context

        if response.severity == ErrorSeverity.CRITICAL:
            logger.error(f"Command failed: {log_data}", exc_info=error)
        elif isinstance(error, HyperspaceError) and not error.recoverable:
            logger.warning(f"Command cannot run: {log_data}")
        else:
            logger.info(f"Command rejected input: {log_data}")
