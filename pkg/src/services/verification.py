"""
Verification Service

Brute-force oracles that re-derive every property of the cell complex
without going through the optimized code paths, plus exhaustive sweeps over
all small trees and pointed trees.

Each oracle works on literal edge sets and networkx connectivity; the only
thing shared with the construction is the (edge count, sorted edges) order in
which cells are listed.
"""

import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.config.settings import settings
from src.models.tree import Vertex, Edge, edge_key, PointedTree, Tree
from src.models.complex import CellComplex, Subtree
from src.models.report import VerificationReport
from src.schemas import tree_to_document, complex_to_document
from src.services.tree_model import (
    build_tree, normalize, enumerate_trees, enumerate_pointed, canonical_code,
    homogeneity_degree, subdivide_edge
)
from src.services.hyperspace_complex import (
    augment, build_complex, cell_of, closure_intersection_dim
)
from src.services.reconstruction import hasse, path_cells, reconstruct, signature

logger = logging.getLogger(__name__)

MINIMAX = "minimax"
INCIDENCE_LOWER_BOUND = "incidence_lower_bound"
MONOTONICITY = "monotonicity"
SUBTREE_COUNT = "subtree_count"
COVERING_LAW = "covering_law"
COVERING_CONVERSE = "covering_converse"
DISJOINTNESS = "disjointness"
INTERSECTION_DIMENSION = "intersection_dimension"
ROUND_TRIP = "round_trip"
PATH_CELLS = "path_cells"

COMPLEX_CHECKS = (
    MINIMAX, INCIDENCE_LOWER_BOUND, MONOTONICITY, SUBTREE_COUNT, COVERING_LAW,
    COVERING_CONVERSE, DISJOINTNESS, INTERSECTION_DIMENSION, ROUND_TRIP, PATH_CELLS
)
MINIMAX_CHECKS = (MINIMAX, INCIDENCE_LOWER_BOUND, MONOTONICITY)

SAME_HYPERSPACE_IFF_ISOMORPHIC = "same_hyperspace_iff_isomorphic"
SIGNATURES_DISTINCT = "signatures_distinct"
KX_EQUALS_HOMOGENEITY = "kx_equals_homogeneity_degree"
FIGURE_COUNTS = "figure_counts"
FIGURE_DIMENSIONS = "figure_dimensions"

# Labelled two-subtree instance: T(X) edges plus the number of end points
# hanging from each vertex of T(X). c is a ramification vertex outside both subtrees.
FIGURE_TRIMMED_EDGES = (
    ("a", "b"), ("a", "e"), ("b", "c"), ("b", "d"), ("e", "f"), ("e", "n1"), ("a", "n2")
)
FIGURE_PENDANTS = {"a": 2, "b": 3, "c": 4, "d": 4, "e": 3, "f": 2, "n1": 4, "n2": 4}
FIGURE_G = (("e", "f"), ("e", "n1"), ("a", "e"), ("a", "b"))
FIGURE_G_PRIME = (("a", "e"), ("a", "n2"), ("a", "b"), ("b", "d"))
FIGURE_EXPECTED = {"n": 9, "l": 2, "l_prime": 2, "m": 6, "m_prime": 8,
                   "dim_g": 17, "dim_g_prime": 19, "intersection": 9}


def _counterexample(t: PointedTree, c: Optional[CellComplex], detail: str) -> Dict[str, Any]:
    return {
        "tree": tree_to_document(t).model_dump(),
        "complex": complex_to_document(c).model_dump() if c is not None else None,
        "detail": detail,
    }


def _x_degree(t: PointedTree, v: Vertex) -> int:
    return sum(1 for edge in t.edges if v in edge)


def _brute_trimmed_edges(t: PointedTree) -> List[Edge]:
    """Edges of X meeting no end point of X."""
    ends = {v for v in t.vertices if _x_degree(t, v) == 1}
    return sorted(edge for edge in t.edges if edge[0] not in ends and edge[1] not in ends)


def _is_connected_through(edges: Iterable[Edge], anchor: Optional[Vertex] = None) -> bool:
    graph = nx.Graph()
    if anchor is not None:
        graph.add_node(anchor)
    graph.add_edges_from(edges)
    return graph.number_of_nodes() > 0 and nx.is_connected(graph)


def brute_subtrees(t: PointedTree) -> List[FrozenSet[Edge]]:
    """Every connected subset of T(X) edges containing the basepoint, by subset search."""
    trimmed = _brute_trimmed_edges(t)
    found = []
    for size in range(len(trimmed) + 1):
        for subset in combinations(trimmed, size):
            if _is_connected_through(subset, t.basepoint):
                found.append(frozenset(subset))
    found.sort(key=lambda edges: (len(edges), tuple(sorted(edges))))
    return found


def _vertices_of(edges: Iterable[Edge], anchor: Vertex) -> Set[Vertex]:
    graph = nx.Graph()
    graph.add_node(anchor)
    graph.add_edges_from(edges)
    return set(graph.nodes)


def brute_dimension(t: PointedTree, edges: FrozenSet[Edge]) -> int:
    """Sum of orders over V(Y) minus twice |E(Y)|: each edge of Y is counted at both ends."""
    return sum(_x_degree(t, v) for v in _vertices_of(edges, t.basepoint)) - 2 * len(edges)


def _brute_meets(first: FrozenSet[Edge], second: FrozenSet[Edge], anchor: Vertex) -> bool:
    """Closures meet iff each extra edge of one subtree can be glued onto the other."""
    for extra, body in ((first - second, second), (second - first, first)):
        for edge in extra:
            if not _is_connected_through(set(body) | {edge}, anchor):
                return False
    return True


def _brute_intersection(t: PointedTree, first: FrozenSet[Edge], second: FrozenSet[Edge]) -> int:
    common = _vertices_of(first, t.basepoint) & _vertices_of(second, t.basepoint)
    union = first | second
    return sum(_x_degree(t, v) - sum(1 for edge in union if v in edge) for v in common)


def _is_path_from(edges: FrozenSet[Edge], anchor: Vertex) -> bool:
    if not edges:
        return True
    graph = nx.Graph(list(edges))
    degrees = dict(graph.degree())
    return max(degrees.values()) <= 2 and degrees.get(anchor) == 1


def _same_pointed_tree(a: PointedTree, b: PointedTree) -> bool:
    """Basepoint-preserving graph isomorphism, found by VF2++."""
    graphs = []
    for t in (a, b):
        graph = t.tree.to_networkx()
        nx.set_node_attributes(graph, {v: v == t.basepoint for v in graph.nodes}, "root")
        graphs.append(graph)
    return nx.vf2pp_is_isomorphic(graphs[0], graphs[1], node_label="root")


class _ComplexChecker:
    """Runs the complex-level checks of one (tree, complex) pair into a report."""

    def __init__(self, t: PointedTree, c: CellComplex, report: VerificationReport):
        self.t = t
        self.c = c
        self.report = report
        self.subtrees = brute_subtrees(t)

    def fail(self, detail: str) -> Dict[str, Any]:
        return _counterexample(self.t, self.c, detail)

    def record(self, name: str, ok: bool, detail: str = "") -> bool:
        return self.report.check(name).record(ok, None if ok else self.fail(detail))

    def aligned(self) -> bool:
        return len(self.subtrees) == len(self.c.cells)

    def check_subtree_count(self) -> None:
        ok = self.aligned()
        detail = f"{len(self.c.cells)} cells, {len(self.subtrees)} subtrees containing the basepoint"
        if ok:
            for index, cell in enumerate(self.c.cells):
                if cell.subtree is not None and cell.subtree.edge_set != self.subtrees[index]:
                    ok, detail = False, f"cell {index} is labelled with the wrong subtree"
                    break
        self.record(SUBTREE_COUNT, ok, detail)

    def check_minimax(self) -> None:
        dims = self.c.dimensions
        order = _x_degree(self.t, self.t.basepoint)
        total = sum(1 for v in self.t.vertices if _x_degree(self.t, v) == 1)
        ok = bool(dims) and min(dims) == order and dims.count(order) == 1 \
            and max(dims) == total and dims.count(total) == 1
        self.record(MINIMAX, ok, f"dimensions {list(dims)}, expected min {order} and max {total} each once")

    def check_incidence_lower_bound(self) -> None:
        trimmed = _brute_trimmed_edges(self.t)
        for size in range(1, len(trimmed) + 1):
            for subset in combinations(trimmed, size):
                if not _is_connected_through(subset):
                    continue
                ends = [v for v in _vertices_of(subset, subset[0][0])
                        if sum(1 for edge in subset if v in edge) == 1]
                outside = {v: _x_degree(self.t, v) - 1 for v in ends}
                low = [v for v, count in outside.items() if count < 2]
                self.record(
                    INCIDENCE_LOWER_BOUND, not low,
                    f"end vertices {sorted(low)} of {sorted(subset)} meet fewer than two outside edges"
                )

    def check_monotonicity(self) -> None:
        dims = self.c.dimensions
        for i, j in combinations(range(len(self.subtrees)), 2):
            small, large = self.subtrees[i], self.subtrees[j]
            if small < large:
                self.record(MONOTONICITY, dims[i] < dims[j], f"dim of cell {i} not below dim of cell {j}")

    def check_covering(self) -> None:
        dims = self.c.dimensions
        for i, j in combinations(range(len(self.subtrees)), 2):
            small, large = self.subtrees[i], self.subtrees[j]
            meet = self.c.intersection(i, j)
            if small < large and len(large - small) == 1:
                (edge,) = large - small
                (added,) = set(edge) - _vertices_of(small, self.t.basepoint)
                expected = dims[i] + _x_degree(self.t, added) - 2
                ok = meet == dims[i] - 1 and dims[j] == expected
                self.record(
                    COVERING_LAW, ok,
                    f"cells {i} < {j} differ by {edge}: intersection {meet}, dims {dims[i]} -> {dims[j]}"
                )
            for lower, upper in ((i, j), (j, i)):
                if meet is not None and meet == dims[lower] - 1:
                    below, above = self.subtrees[lower], self.subtrees[upper]
                    ok = below < above and len(above - below) == 1
                    self.record(
                        COVERING_CONVERSE, ok,
                        f"cells {lower} -> {upper} cover by intersection {meet} but do not differ by one edge"
                    )

    def check_disjointness(self) -> None:
        for i, j in combinations(range(len(self.subtrees)), 2):
            expected = _brute_meets(self.subtrees[i], self.subtrees[j], self.t.basepoint)
            present = self.c.intersection(i, j) is not None
            self.record(DISJOINTNESS, expected == present,
                        f"cells {i}, {j}: closures meet={expected}, table lists the pair={present}")

    def check_intersection_dimension(self) -> None:
        for i, j in combinations(range(len(self.subtrees)), 2):
            meet = self.c.intersection(i, j)
            if meet is None:
                continue
            expected = _brute_intersection(self.t, self.subtrees[i], self.subtrees[j])
            self.record(INTERSECTION_DIMENSION, meet == expected,
                        f"cells {i}, {j}: intersection {meet}, counted {expected}")
        for index, edges in enumerate(self.subtrees):
            expected = brute_dimension(self.t, edges)
            self.record(INTERSECTION_DIMENSION, self.c.dimensions[index] == expected,
                        f"cell {index}: dimension {self.c.dimensions[index]}, counted {expected}")

    def check_round_trip(self) -> None:
        rebuilt = reconstruct(self.c.strip())
        self.record(ROUND_TRIP, _same_pointed_tree(rebuilt, self.t),
                    "reconstructed tree is not isomorphic to the input as a pointed tree")

    def check_path_cells(self) -> None:
        found = sorted(path_cells(hasse(self.c)))
        expected = [i for i, edges in enumerate(self.subtrees) if _is_path_from(edges, self.t.basepoint)]
        self.record(PATH_CELLS, found == expected, f"path cells {found}, expected {expected}")

    def run(self, names: Sequence[str]) -> None:
        steps: Dict[str, Callable[[], None]] = {
            SUBTREE_COUNT: self.check_subtree_count,
            MINIMAX: self.check_minimax,
            INCIDENCE_LOWER_BOUND: self.check_incidence_lower_bound,
            MONOTONICITY: self.check_monotonicity,
            COVERING_LAW: self.check_covering,
            COVERING_CONVERSE: self.check_covering,
            DISJOINTNESS: self.check_disjointness,
            INTERSECTION_DIMENSION: self.check_intersection_dimension,
            ROUND_TRIP: self.check_round_trip,
            PATH_CELLS: self.check_path_cells,
        }
        index_based = {MONOTONICITY, COVERING_LAW, COVERING_CONVERSE, DISJOINTNESS, INTERSECTION_DIMENSION}
        for name in names:
            self.report.check(name)

        done = set()
        for name in names:
            step = steps[name]
            if name in index_based and not self.aligned():
                self.record(name, False, "cell count does not match the subtree count")
                continue
            if step in done:
                continue
            done.add(step)
            try:
                step()
            except Exception as e:
                logger.debug(f"Check {name} raised {type(e).__name__}: {e}")
                self.record(name, False, f"{type(e).__name__}: {e}")


def check_complex(
    t: PointedTree,
    c: CellComplex,
    checks: Sequence[str] = COMPLEX_CHECKS,
    report: Optional[VerificationReport] = None
) -> VerificationReport:
    """
    Check a complex, possibly supplied from outside or corrupted, against the
    pointed tree it claims to describe. Failures are recorded, never raised.
    """
    report = report or VerificationReport(scope=len(t.edges))
    try:
        checker = _ComplexChecker(t, c, report)
    except Exception as e:
        for name in checks:
            report.check(name).record(False, _counterexample(t, c, f"{type(e).__name__}: {e}"))
        return report
    checker.run(checks)
    report.notes["cells"] = report.notes.get("cells", 0) + len(c.cells)
    report.notes["pairs"] = report.notes.get("pairs", 0) + len(c.cells) * (len(c.cells) - 1) // 2
    return report


def check_pointed(t: PointedTree, checks: Sequence[str] = COMPLEX_CHECKS) -> VerificationReport:
    """Build the complex of (X, p), augmenting first when ord(p) < 3, and check it."""
    report = VerificationReport(scope=len(t.edges))
    try:
        augmented, attached = augment(normalize(t))
        c = build_complex(augmented)
    except Exception as e:
        report.check(ROUND_TRIP).record(False, _counterexample(t, None, f"{type(e).__name__}: {e}"))
        return report
    if attached:
        report.notes["attached"] = attached
    return check_complex(augmented, c, checks, report)


def kx_size(tree: Tree) -> int:
    """
    Number of distinct hyperspaces C(x, X) over every point x.

    Every vertex and every edge interior is tried, without orbit reduction.
    """
    signatures = {signature(PointedTree(tree, v)) for v in tree.vertices}
    signatures |= {signature(subdivide_edge(tree, u, v)) for u, v in tree.edges}
    return len(signatures)


def figure_instance() -> Tuple[PointedTree, Subtree, Subtree]:
    edges = list(FIGURE_TRIMMED_EDGES)
    for vertex, count in sorted(FIGURE_PENDANTS.items()):
        edges.extend((vertex, f"{vertex}.{k}") for k in range(1, count + 1))
    t = build_tree(edges, "a")
    g = Subtree(frozenset(edge_key(u, v) for u, v in FIGURE_G), "a")
    g_prime = Subtree(frozenset(edge_key(u, v) for u, v in FIGURE_G_PRIME), "a")
    return t, g, g_prime


def figure_counts(t: PointedTree, g: Subtree, g_prime: Subtree) -> Dict[str, int]:
    """The counts n, l, l', m, m' of two subtrees, by direct incidence counting."""
    common = g.vertex_set & g_prime.vertex_set
    union = g.edge_set | g_prime.edge_set

    def touching(edges: Iterable[Edge], vertices: Set[Vertex]) -> int:
        return sum(1 for edge in edges if set(edge) & vertices)

    outside_g = [edge for edge in t.edges if edge not in g.edge_set]
    outside_g_prime = [edge for edge in t.edges if edge not in g_prime.edge_set]
    return {
        "n": touching((edge for edge in t.edges if edge not in union), common),
        "l": touching(g.edge_set - g_prime.edge_set, common),
        "l_prime": touching(g_prime.edge_set - g.edge_set, common),
        "m": touching(outside_g, g.vertex_set - common),
        "m_prime": touching(outside_g_prime, g_prime.vertex_set - common),
    }


def figure_check() -> VerificationReport:
    """Spot check of the labelled two-subtree instance and the dimension formulas."""
    t, g, g_prime = figure_instance()
    report = VerificationReport(scope=len(t.edges))

    counts = figure_counts(t, g, g_prime)
    first, second = cell_of(g, t), cell_of(g_prime, t)
    observed = dict(counts)
    observed["dim_g"] = first.dimension
    observed["dim_g_prime"] = second.dimension
    observed["intersection"] = closure_intersection_dim(first, second, t)
    report.notes.update(observed)

    mismatched = sorted(key for key in ("n", "l", "l_prime", "m", "m_prime")
                        if counts[key] != FIGURE_EXPECTED[key])
    report.check(FIGURE_COUNTS).record(
        not mismatched, _counterexample(t, None, f"counts {mismatched} differ from {FIGURE_EXPECTED}")
    )

    formulas = {
        "dim_g": counts["n"] + counts["l_prime"] + counts["m"],
        "dim_g_prime": counts["n"] + counts["l"] + counts["m_prime"],
        "intersection": counts["n"],
    }
    ok = all(observed[key] == FIGURE_EXPECTED[key] == formulas[key] for key in formulas)
    report.check(FIGURE_DIMENSIONS).record(
        ok, _counterexample(t, None, f"observed {observed}, formulas give {formulas}")
    )
    return report


# Worker functions run in child processes and must be importable at module
# level. Custom exceptions do not survive pickling, so workers return errors.

def _signature_worker(t: PointedTree) -> Tuple[Optional[Tuple[int, int, str]], Optional[str]]:
    try:
        return signature(t).as_tuple(), None
    except Exception as e:
        return None, f"{type(e).__name__}: {e}"


def _kx_worker(tree: Tree) -> Tuple[Optional[int], Optional[int], Optional[str]]:
    try:
        return kx_size(tree), homogeneity_degree(tree), None
    except Exception as e:
        return None, None, f"{type(e).__name__}: {e}"


def _pointed_worker(job: Tuple[PointedTree, Tuple[str, ...]]) -> VerificationReport:
    t, checks = job
    return check_pointed(t, checks)


async def _fan_out(func: Callable, items: Sequence, jobs: int) -> List:
    """Map func over items inline, or across a process pool when jobs > 1."""
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(await asyncio.gather(*(loop.run_in_executor(pool, func, item) for item in items)))


def _require_positive(max_edges: int) -> None:
    if max_edges < 1:
        raise ValueError(f"max_edges must be >= 1, got {max_edges}")


async def uniqueness_sweep(max_edges: int, jobs: Optional[int] = None) -> VerificationReport:
    """same_hyperspace agrees with rooted isomorphism on every pair of pointed-tree classes."""
    _require_positive(max_edges)
    started = time.monotonic()
    pointed = list(enumerate_pointed(max_edges))
    results = await _fan_out(_signature_worker, pointed, jobs or settings.SWEEP_JOBS)

    report = VerificationReport(scope=max_edges, notes={"pointed_classes": len(pointed)})
    same_check = report.check(SAME_HYPERSPACE_IFF_ISOMORPHIC)
    distinct_check = report.check(SIGNATURES_DISTINCT)

    for t, (sig, error) in zip(pointed, results):
        if error is not None:
            same_check.record(False, _counterexample(t, None, error))

    codes = [canonical_code(t) for t in pointed]
    for i, j in combinations(range(len(pointed)), 2):
        sig_a, sig_b = results[i][0], results[j][0]
        if sig_a is None or sig_b is None:
            continue
        same = sig_a == sig_b
        iso = codes[i] == codes[j]
        if not same_check.record(same == iso) and same_check.counterexample is None:
            other = tree_to_document(pointed[j]).model_dump()
            same_check.counterexample = _counterexample(
                pointed[i], None, f"same_hyperspace={same}, rooted_isomorphic={iso} against {other}"
            )
        if not distinct_check.record(not same) and distinct_check.counterexample is None:
            other = tree_to_document(pointed[j]).model_dump()
            distinct_check.counterexample = _counterexample(
                pointed[i], None, f"signature {list(sig_a)} shared with {other}"
            )

    report.elapsed = time.monotonic() - started
    logger.info(f"Uniqueness sweep to {max_edges} edges: {len(pointed)} classes in {report.elapsed:.2f}s")
    return report


async def corollary_sweep(max_edges: int, jobs: Optional[int] = None) -> VerificationReport:
    """kx_size equals the homogeneity degree for every tree."""
    _require_positive(max_edges)
    started = time.monotonic()
    trees = list(enumerate_trees(max_edges))
    results = await _fan_out(_kx_worker, trees, jobs or settings.SWEEP_JOBS)

    report = VerificationReport(scope=max_edges, notes={"trees": len(trees)})
    check = report.check(KX_EQUALS_HOMOGENEITY)
    for tree, (kx, degree, error) in zip(trees, results):
        ok = error is None and kx == degree
        check.record(ok, None if ok else _counterexample(
            PointedTree(tree, min(tree.vertices)), None, error or f"kx_size={kx}, homogeneity_degree={degree}"
        ))

    report.elapsed = time.monotonic() - started
    logger.info(f"Corollary sweep to {max_edges} edges: {len(trees)} trees in {report.elapsed:.2f}s")
    return report


async def _pointed_sweep(max_edges: int, checks: Tuple[str, ...], jobs: Optional[int]) -> VerificationReport:
    _require_positive(max_edges)
    started = time.monotonic()
    pointed = [t for t in enumerate_pointed(max_edges) if t.basepoint_order >= 3]
    results = await _fan_out(_pointed_worker, [(t, checks) for t in pointed], jobs or settings.SWEEP_JOBS)

    report = VerificationReport(scope=max_edges)
    for name in checks:
        report.check(name)
    for partial in results:
        report.merge(partial)
    report.notes["pointed_trees"] = len(pointed)

    report.elapsed = time.monotonic() - started
    logger.info(f"Pointed sweep to {max_edges} edges: {len(pointed)} pointed trees in {report.elapsed:.2f}s")
    return report


async def roundtrip_sweep(max_edges: int, jobs: Optional[int] = None) -> VerificationReport:
    """Every complex-level check on every pointed tree with basepoint order at least 3."""
    return await _pointed_sweep(max_edges, COMPLEX_CHECKS, jobs)


async def minimax_sweep(max_edges: int, jobs: Optional[int] = None) -> VerificationReport:
    return await _pointed_sweep(max_edges, MINIMAX_CHECKS, jobs)
