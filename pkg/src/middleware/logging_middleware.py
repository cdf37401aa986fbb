"""
Logging middleware for command handlers.
Logs command start, finish, exit code and elapsed time.
"""
import argparse
import logging
import time
from typing import Any, Awaitable, Callable, Dict

from src.config.logging_config import LogContext

Handler = Callable[[argparse.Namespace, Dict[str, Any]], Awaitable[int]]


class LoggingMiddleware:
    """Middleware for logging command runs."""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    async def __call__(self, handler: Handler, event: argparse.Namespace, data: Dict[str, Any]) -> int:
        """Log the command and call the handler."""
        command = data.get("command", getattr(event, "command", None))
        started = time.monotonic()

        with LogContext(command=command, max_edges=getattr(event, "max_edges", None)):
            self.logger.info(f"Running {command} (input={getattr(event, 'input', None)})")
            try:
                exit_code = await handler(event, data)
            except Exception as e:
                self.logger.error(f"Handler error for {command}: {type(e).__name__}: {e}")
                raise
            self.logger.info(f"Finished {command} with exit code {exit_code} in {time.monotonic() - started:.3f}s")
            return exit_code
