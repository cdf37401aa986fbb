"""
Shared argument definitions and output helpers for command handlers.
"""
import argparse
from typing import Any, Dict

from src.services.result_formatter import FORMATS, FORMAT_JSON, FormattedResult


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}")
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}")
    return number


def add_format_argument(parser: argparse.ArgumentParser, default: str = FORMAT_JSON) -> None:
    parser.add_argument("--format", choices=FORMATS, default=default, help="output format")


def add_input_argument(parser: argparse.ArgumentParser, required: bool = True, help: str = "input JSON file, - for stdin") -> None:
    parser.add_argument("--input", required=required, metavar="FILE", help=help)


def add_sweep_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-edges", type=positive_int, metavar="N", help="largest tree size swept")
    parser.add_argument("--jobs", type=positive_int, metavar="N", help="worker processes for sweeps")


def emit(data: Dict[str, Any], result: FormattedResult) -> None:
    """Write a rendered result to the command's output stream."""
    data["output"].write(result.text)
