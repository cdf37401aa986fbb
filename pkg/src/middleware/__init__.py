"""
Middleware wrapped around every command handler.
"""
from .logging_middleware import LoggingMiddleware
from .error_middleware import ErrorMiddleware

__all__ = ["LoggingMiddleware", "ErrorMiddleware"]
