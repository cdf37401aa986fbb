"""
analyze and reconstruct commands.
"""
import argparse
import logging
from typing import Any, Dict

from src.exceptions import EXIT_OK
from src.repositories import TreeRepository, ComplexRepository
from src.services.tree_model import normalize
from src.services.hyperspace_complex import build_augmented_complex
from src.services.reconstruction import reconstruct_original
from src.services.result_formatter import ResultFormatter
from .common import add_format_argument, add_input_argument, positive_int, emit

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    analyze = subparsers.add_parser("analyze", help="Tree JSON -> Complex JSON")
    add_input_argument(analyze, help="Tree JSON file, - for stdin")
    add_format_argument(analyze)
    analyze.add_argument("--cap", type=positive_int, metavar="CELLS", help="refuse complexes with more cells")
    analyze.add_argument("--hasse", action="store_true", help="append the Hasse diagram as DOT")
    analyze.set_defaults(handler=handle_analyze)

    rebuild = subparsers.add_parser("reconstruct", help="Complex JSON -> Tree JSON")
    add_input_argument(rebuild, help="Complex JSON file, - for stdin")
    add_format_argument(rebuild)
    rebuild.set_defaults(handler=handle_reconstruct)


async def handle_analyze(args: argparse.Namespace, data: Dict[str, Any]) -> int:
    """
    Build the cell complex of the input pointed tree.

    Basepoints of order below 3 are augmented first; the complex records
    the original order and the number of attached arcs.

    Args:
        args: Parsed arguments: input, format, cap and hasse
        data: Shared command context carrying the output stream

    Returns:
        EXIT_OK; input problems surface as exceptions for the error handler
    """
    t = normalize(TreeRepository().load_pointed(args.input))
    complex_ = build_augmented_complex(t, cap=args.cap)
    logger.info(f"Complex of {len(t.edges)}-edge tree: {len(complex_.cells)} cells")
    emit(data, ResultFormatter().format_complex(complex_, args.format, with_hasse=args.hasse))
    return EXIT_OK


async def handle_reconstruct(args: argparse.Namespace, data: Dict[str, Any]) -> int:
    """
    Rebuild the pointed tree from dimensions and intersections alone.

    Args:
        args: Parsed arguments: input complex and format
        data: Shared command context carrying the output stream

    Returns:
        EXIT_OK

    Raises:
        MalformedComplex: the complex cannot come from any pointed tree
    """
    complex_ = ComplexRepository().load_complex(args.input).strip()
    t = reconstruct_original(complex_)
    logger.info(f"Reconstructed a {len(t.edges)}-edge tree from {len(complex_.cells)} cells")
    emit(data, ResultFormatter().format_tree(t, args.format))
    return EXIT_OK
