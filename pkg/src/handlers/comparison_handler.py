"""
compare and kx commands.
"""
import argparse
import logging
from typing import Any, Dict

from src.exceptions import EXIT_OK, InputFormatError
from src.repositories import TreeRepository
from src.services.tree_model import normalize, normalize_free, homogeneity_degree
from src.services.reconstruction import signature
from src.services.verification import kx_size
from src.services.result_formatter import ResultFormatter, FORMAT_JSON, FORMAT_TABLE
from .common import add_input_argument, emit

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    compare = subparsers.add_parser("compare", help="decide whether two pointed trees have the same hyperspace")
    compare.add_argument("--input", action="append", required=True, metavar="FILE",
                         help="Tree JSON file; give exactly two")
    compare.add_argument("--format", choices=(FORMAT_JSON, FORMAT_TABLE), default=FORMAT_JSON)
    compare.set_defaults(handler=handle_compare)

    kx = subparsers.add_parser("kx", help="size of K(X) next to the homogeneity degree")
    add_input_argument(kx, help="Tree JSON file; any basepoint is ignored")
    kx.add_argument("--format", choices=(FORMAT_JSON, FORMAT_TABLE), default=FORMAT_JSON)
    kx.set_defaults(handler=handle_kx)


async def handle_compare(args: argparse.Namespace, data: Dict[str, Any]) -> int:
    """
    Decide whether two pointed trees have the same hyperspace C(p, X).

    Args:
        args: Parsed arguments: exactly two inputs and format
        data: Shared command context carrying the output stream

    Returns:
        EXIT_OK whether or not the hyperspaces agree

    Raises:
        InputFormatError: not exactly two inputs
    """
    if len(args.input) != 2:
        raise InputFormatError(f"compare needs exactly two --input files, got {len(args.input)}")
    repository = TreeRepository()
    first, second = (normalize(repository.load_pointed(path)) for path in args.input)
    result = ResultFormatter().format_comparison(signature(first), signature(second), args.format)
    emit(data, result)
    return EXIT_OK


async def handle_kx(args: argparse.Namespace, data: Dict[str, Any]) -> int:
    """Count the hyperspaces C(p, X) over every point p of a free tree."""
    tree = normalize_free(TreeRepository().load_free(args.input))
    kx, degree = kx_size(tree), homogeneity_degree(tree)
    if kx != degree:
        logger.warning(f"kx_size {kx} differs from homogeneity degree {degree}")
    emit(data, ResultFormatter().format_kx(kx, degree, args.format))
    return EXIT_OK
