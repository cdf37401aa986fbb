"""
Main entry point for the hyperspace toolkit command line.
"""
import argparse
import asyncio
import logging
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, TextIO

from src.config.settings import settings
from src.config.logging_config import setup_logging
from src.exceptions import ErrorHandler, ErrorContext, ConfigurationError, EXIT_INPUT_ERROR
from src.handlers import HANDLER_MODULES
from src.middleware.logging_middleware import LoggingMiddleware
from src.middleware.error_middleware import ErrorMiddleware

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser with every command registered."""
    parser = argparse.ArgumentParser(
        prog="hyperspace",
        description="Cell complexes of the hyperspace C(p,X) for finite trees",
    )
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="defaults to LOG_LEVEL")
    parser.add_argument("--output", metavar="FILE", help="write command output to FILE instead of stdout")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in HANDLER_MODULES:
        module.register(subparsers)
    return parser


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as stream:
        yield stream


async def dispatch(args: argparse.Namespace, data: Dict[str, Any]) -> int:
    """Run the command handler wrapped in error then logging middleware."""
    logging_middleware = LoggingMiddleware()
    error_middleware = ErrorMiddleware()

    async def logged(event, payload):
        return await logging_middleware(args.handler, event, payload)

    return await error_middleware(logged, args, data)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and return its exit code

    Settings are validated before logging is configured; on invalid settings
    logging stays on stderr and the command exits with code 2.
    """
    args = create_parser().parse_args(argv)

    try:
        settings.validate_required_settings()
    except ConfigurationError as e:
        setup_logging(args.log_level, file_logging=False)
        response = ErrorHandler().handle_error(e, ErrorContext(command=args.command))
        sys.stderr.write(response.message + "\n")
        return response.exit_code

    setup_logging(args.log_level)
    logger = logging.getLogger(__name__)

    try:
        with open_output(args.output) as output:
            data = {"command": args.command, "output": output, "stderr": sys.stderr}
            exit_code = asyncio.run(dispatch(args, data))
    except OSError as e:
        sys.stderr.write(f"cannot write output: {e}\n")
        return EXIT_INPUT_ERROR

    logger.debug(f"Exit code {exit_code}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
