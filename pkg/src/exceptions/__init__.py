"""
Custom exceptions for the hyperspace toolkit
"""

from .base_exceptions import (
    HyperspaceError,
    TreeValidationError,
    CycleDetected,
    Disconnected,
    BasepointMissing,
    DuplicateEdge,
    SelfLoop,
    EmptyTree,
    UnknownVertex,
    ComplexError,
    BasepointNotInTrimmedTree,
    NeedsAugmentation,
    ComplexTooLarge,
    AmbiguousBase,
    MalformedComplex,
    InvariantViolation,
    InputFormatError,
    ConfigurationError
)

from .error_handler import (
    ErrorHandler,
    ErrorContext,
    ErrorResponse,
    ErrorSeverity,
    EXIT_OK,
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR
)

__all__ = [
    'HyperspaceError',
    'TreeValidationError',
    'CycleDetected',
    'Disconnected',
    'BasepointMissing',
    'DuplicateEdge',
    'SelfLoop',
    'EmptyTree',
    'UnknownVertex',
    'ComplexError',
    'BasepointNotInTrimmedTree',
    'NeedsAugmentation',
    'ComplexTooLarge',
    'AmbiguousBase',
    'MalformedComplex',
    'InvariantViolation',
    'InputFormatError',
    'ConfigurationError',
    'ErrorHandler',
    'ErrorContext',
    'ErrorResponse',
    'ErrorSeverity',
    'EXIT_OK',
    'EXIT_CHECK_FAILED',
    'EXIT_INPUT_ERROR'
]
