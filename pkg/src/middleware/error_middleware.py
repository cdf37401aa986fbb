"""
Error handling middleware for command handlers.
Turns any exception into a one-line diagnostic on stderr and an exit code.
"""
import argparse
import logging
import sys
from typing import Any, Awaitable, Callable, Dict

from src.exceptions import ErrorHandler, ErrorContext

Handler = Callable[[argparse.Namespace, Dict[str, Any]], Awaitable[int]]


class ErrorMiddleware:
    """Middleware for global error handling."""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.error_handler = ErrorHandler()

    async def __call__(self, handler: Handler, event: argparse.Namespace, data: Dict[str, Any]) -> int:
        """Handle errors from command handlers."""
        try:
            return await handler(event, data)
        except Exception as e:
            return self._handle_error(event, data, e)

    def _handle_error(self, event: argparse.Namespace, data: Dict[str, Any], error: Exception) -> int:
        inputs = getattr(event, "input", None)
        if isinstance(inputs, (list, tuple)):
            inputs = ", ".join(str(path) for path in inputs)
        context = ErrorContext(
            command=data.get("command", getattr(event, "command", None)),
            input_path=data.get("input_path", inputs),
        )
        response = self.error_handler.handle_error(error, context)
        stream = data.get("stderr", sys.stderr)
        try:
            stream.write(response.message.replace("\n", " ") + "\n")
        except Exception as e:
            self.logger.error(f"Failed to write diagnostic: {e}")
        return response.exit_code
