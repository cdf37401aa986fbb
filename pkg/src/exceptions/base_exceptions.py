"""
Base exceptions for the hyperspace toolkit
"""

from typing import Optional, Dict, Any


class HyperspaceError(Exception):
    """Base exception for all toolkit errors"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        user_message: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
        recoverable: bool = True
    ):
        super().__init__(message)
        self.error_code = error_code
        self.user_message = user_message or message
        self.context = context or {}
        self.recoverable = recoverable


class TreeValidationError(HyperspaceError):
    """Raised when an edge list does not describe a valid pointed tree"""

    def __init__(
        self,
        message: str,
        validation_type: str,
        element: Any = None
    ):
        super().__init__(
            message=message,
            error_code=f"TREE_{validation_type.upper()}",
            context={"element": element},
            recoverable=True
        )
        self.validation_type = validation_type
        self.element = element


class CycleDetected(TreeValidationError):
    def __init__(self, edge):
        super().__init__(f"Edge {tuple(edge)} closes a cycle", "cycle_detected", edge)


class Disconnected(TreeValidationError):
    def __init__(self, vertex):
        super().__init__(f"Vertex {vertex!r} is not connected to the basepoint", "disconnected", vertex)


class BasepointMissing(TreeValidationError):
    def __init__(self, basepoint):
        super().__init__(f"Basepoint {basepoint!r} is not a vertex of the tree", "basepoint_missing", basepoint)


class DuplicateEdge(TreeValidationError):
    def __init__(self, edge):
        super().__init__(f"Edge {tuple(edge)} appears more than once", "duplicate_edge", edge)


class SelfLoop(TreeValidationError):
    def __init__(self, vertex):
        super().__init__(f"Self-loop at vertex {vertex!r}", "self_loop", vertex)


class EmptyTree(TreeValidationError):
    def __init__(self):
        super().__init__("A tree needs at least one edge", "empty_tree", None)


class UnknownVertex(TreeValidationError):
    def __init__(self, vertex):
        super().__init__(f"Vertex {vertex!r} does not belong to the tree", "unknown_vertex", vertex)


class ComplexError(HyperspaceError):
    """Raised when a cell complex cannot be built or read"""

    def __init__(
        self,
        message: str,
        complex_error: str,
        context: Optional[Dict[str, Any]] = None,
        recoverable: bool = True
    ):
        super().__init__(
            message=message,
            error_code=f"COMPLEX_{complex_error.upper()}",
            context=context,
            recoverable=recoverable
        )
        self.complex_error = complex_error


class BasepointNotInTrimmedTree(ComplexError):
    def __init__(self, basepoint):
        super().__init__(
            f"Basepoint {basepoint!r} is not a vertex of the trimmed tree; augment first",
            "basepoint_not_in_trimmed_tree",
            {"basepoint": basepoint}
        )


class NeedsAugmentation(ComplexError):
    def __init__(self, basepoint, order: int):
        super().__init__(
            f"Basepoint {basepoint!r} has order {order} < 3; augment before building the complex",
            "needs_augmentation",
            {"basepoint": basepoint, "order": order}
        )


class ComplexTooLarge(ComplexError):
    def __init__(self, cap: int):
        super().__init__(
            f"Sub_p(T(X)) exceeds the configured cap of {cap} cells",
            "too_large",
            {"cap": cap}
        )
        self.cap = cap


class AmbiguousBase(ComplexError):
    def __init__(self, cells, dimension: int):
        super().__init__(
            f"Cells {list(cells)} share the minimum dimension {dimension}",
            "ambiguous_base",
            {"cells": list(cells), "dimension": dimension}
        )


class MalformedComplex(ComplexError):
    def __init__(self, message: str, **context):
        super().__init__(message, "malformed", context)


class InvariantViolation(HyperspaceError):
    """Raised when an internal invariant that the theory guarantees fails"""

    def __init__(self, message: str, invariant: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code=f"INVARIANT_{invariant.upper()}",
            user_message="Internal invariant violated; please report this input.",
            context=context,
            recoverable=False
        )
        self.invariant = invariant


class InputFormatError(HyperspaceError):
    """Raised when an input document cannot be parsed"""

    def __init__(self, message: str, source: Optional[str] = None):
        super().__init__(
            message=message,
            error_code="INPUT_FORMAT",
            context={"source": source},
            recoverable=True
        )
        self.source = source


class ConfigurationError(HyperspaceError):
    """Raised when configuration is invalid or missing"""

    def __init__(self, message: str, config_key: str):
        super().__init__(
            message=message,
            error_code=f"CONFIG_{config_key.upper()}",
            recoverable=False
        )
        self.config_key = config_key
