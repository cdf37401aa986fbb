"""
verify and enumerate commands.
"""
import argparse
import logging
from typing import Any, Dict, List

from src.config.settings import settings
from src.exceptions import EXIT_OK, EXIT_CHECK_FAILED, InputFormatError
from src.models.report import VerificationReport
from src.repositories import TreeRepository, ComplexRepository
from src.services.tree_model import normalize, enumerate_trees, enumerate_pointed
from src.services.hyperspace_complex import augment
from src.services.verification import (
    check_pointed, check_complex, figure_check, uniqueness_sweep, corollary_sweep,
    roundtrip_sweep, minimax_sweep
)
from src.services.result_formatter import ResultFormatter, FORMAT_JSON, FORMAT_TABLE
from .common import add_input_argument, add_sweep_arguments, positive_int, emit

logger = logging.getLogger(__name__)

SWEEPS = ("uniqueness", "kx", "roundtrip", "minimax", "all")


def register(subparsers) -> None:
    verify = subparsers.add_parser("verify", help="run the checks on one tree or exhaustive sweeps")
    add_input_argument(verify, required=False, help="Tree JSON file to check")
    verify.add_argument("--complex", metavar="FILE", help="Complex JSON to check against --input instead of building it")
    verify.add_argument("--figure", action="store_true", help="spot check the labelled two-subtree instance")
    verify.add_argument("--sweep", choices=SWEEPS, help="exhaustive sweep to run")
    verify.add_argument("--format", choices=(FORMAT_JSON, FORMAT_TABLE), default=FORMAT_JSON)
    add_sweep_arguments(verify)
    verify.set_defaults(handler=handle_verify)

    enumerate_ = subparsers.add_parser("enumerate", help="list trees or pointed trees up to N edges")
    enumerate_.add_argument("--max-edges", type=positive_int, required=True, metavar="N")
    enumerate_.add_argument("--pointed", action="store_true", help="one pointed tree per point class")
    enumerate_.add_argument("--format", choices=(FORMAT_JSON, FORMAT_TABLE), default=FORMAT_JSON)
    enumerate_.set_defaults(handler=handle_enumerate)


async def _run_sweeps(args: argparse.Namespace) -> List[VerificationReport]:
    """Run the selected sweeps at their configured or requested bounds."""
    pair_edges = args.max_edges or settings.PAIR_SWEEP_MAX_EDGES
    tree_edges = args.max_edges or settings.TREE_SWEEP_MAX_EDGES
    jobs = args.jobs or settings.SWEEP_JOBS
    selected = {"uniqueness", "kx", "roundtrip", "minimax"} if args.sweep == "all" else {args.sweep}

    reports = []
    if "uniqueness" in selected:
        reports.append(await uniqueness_sweep(pair_edges, jobs))
    if "kx" in selected:
        reports.append(await corollary_sweep(tree_edges, jobs))
    # the roundtrip sweep already runs the minimax checks
    if "roundtrip" in selected:
        reports.append(await roundtrip_sweep(tree_edges, jobs))
    elif "minimax" in selected:
        reports.append(await minimax_sweep(tree_edges, jobs))
    return reports


async def handle_verify(args: argparse.Namespace, data: Dict[str, Any]) -> int:
    """
    Check one pointed tree (optionally against a supplied complex), the
    labelled figure instance, or exhaustive sweeps; with no selection every
    sweep and the figure check run.

    Args:
        args: Parsed arguments: input, complex, figure, sweep, max_edges,
            jobs and format
        data: Shared command context carrying the output stream

    Returns:
        EXIT_OK when every check passes, EXIT_CHECK_FAILED otherwise

    Raises:
        InputFormatError: --complex given without --input
    """
    reports: List[VerificationReport] = []

    if args.complex is not None and args.input is None:
        raise InputFormatError("--complex needs the tree it belongs to; pass it with --input", source=args.complex)
    if args.input is not None:
        t = normalize(TreeRepository().load_pointed(args.input))
        if args.complex is not None:
            augmented, _ = augment(t)
            supplied = ComplexRepository().load_complex(args.complex, anchor=augmented.basepoint)
            reports.append(check_complex(augmented, supplied))
        else:
            reports.append(check_pointed(t))
    if args.figure:
        reports.append(figure_check())
    if args.sweep is not None:
        reports.extend(await _run_sweeps(args))
    if not reports:
        args.sweep = "all"
        reports.extend(await _run_sweeps(args))
        reports.append(figure_check())

    combined = VerificationReport(scope=max(report.scope for report in reports))
    for report in reports:
        combined.merge(report)
        combined.elapsed += report.elapsed
    logger.info(f"Verification finished: {combined.total_failures} failures, {combined.elapsed:.2f}s in sweeps")

    emit(data, ResultFormatter().format_report(combined, args.format))
    return EXIT_OK if combined.passed else EXIT_CHECK_FAILED


async def handle_enumerate(args: argparse.Namespace, data: Dict[str, Any]) -> int:
    items = enumerate_pointed(args.max_edges) if args.pointed else enumerate_trees(args.max_edges)
    emit(data, ResultFormatter().format_enumeration(items, args.format))
    return EXIT_OK
