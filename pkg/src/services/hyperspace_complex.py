"""
Cell decomposition of the hyperspace C(p,X) for a finite tree X.

The components of the manifold part of C(p,X) correspond one to one with the
subtrees of the trimmed tree T(X) containing p. Each component U_Y is an open
cell whose dimension is the number of edges of X outside Y incident on Y.
"""

import logging
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from src.config.settings import settings
from src.exceptions import (
    UnknownVertex, Disconnected, BasepointNotInTrimmedTree, NeedsAugmentation,
    ComplexTooLarge, InvariantViolation
)
from src.models.tree import Vertex, Edge, edge_key, endpoints, Tree, PointedTree, TreeClass
from src.models.complex import TrimmedTree, Subtree, Cell, CellComplex
from src.services.tree_model import fresh_vertex, tree_class

logger = logging.getLogger(__name__)

ATTACHED_STEM = "arc"


def order_of(v: Vertex, t: PointedTree) -> int:
    """
    ord(v, X) for a vertex of the combinatorial tree.

    Args:
        v: Vertex of the tree
        t: Pointed tree holding the vertex

    Returns:
        The degree of v

    Raises:
        UnknownVertex: v is not a vertex of t
    """
    if v not in t.vertices:
        raise UnknownVertex(v)
    return t.degree(v)


def trimmed_tree(t: PointedTree) -> TrimmedTree:
    """
    T(X): the convex hull of the ramification points of X.

    Arcs trim to nothing and simple n-ods to their centre. Otherwise vertices
    that are not ramification points and have at most one remaining
    neighbour are peeled repeatedly; an ordinary basepoint lying between
    ramification points survives as an interior point of T(X).

    Raises:
        InvariantViolation: an end point of T(X) meets fewer than two edges
            of X outside T(X)
    """
    kind = tree_class(t.tree)
    if kind == TreeClass.ARC:
        return TrimmedTree(frozenset(), frozenset())
    ramification = t.tree.ramification_points()
    if kind == TreeClass.SIMPLE_N_OD:
        return TrimmedTree(ramification, frozenset())

    remaining = {v: set(ns) for v, ns in t.adjacency.items()}
    peelable = [v for v in remaining if v not in ramification and len(remaining[v]) <= 1]
    while peelable:
        v = peelable.pop()
        if v not in remaining:
            continue
        for w in remaining.pop(v):
            remaining[w].discard(v)
            if w not in ramification and len(remaining[w]) <= 1:
                peelable.append(w)

    vertices = frozenset(remaining)
    trimmed = TrimmedTree(vertices, frozenset(edge for edge in t.edges if edge[0] in vertices and edge[1] in vertices))
    for v in sorted(vertices):
        if trimmed.degree(v) == 1 and t.degree(v) - 1 < 2:
            raise InvariantViolation(
                f"End point {v!r} of T(X) meets fewer than two edges outside T(X)",
                "trimmed_end_incidence",
                {"vertex": v}
            )
    return trimmed


def _rooted_children(trimmed: TrimmedTree, root: Vertex) -> Dict[Vertex, List[Vertex]]:
    adjacency: Dict[Vertex, List[Vertex]] = {v: [] for v in trimmed.vertices}
    for u, v in trimmed.sorted_edges():
        adjacency[u].append(v)
        adjacency[v].append(u)

    children: Dict[Vertex, List[Vertex]] = {}
    stack = [(root, None)]
    while stack:
        v, parent = stack.pop()
        children[v] = [w for w in adjacency[v] if w != parent]
        stack.extend((w, v) for w in children[v])
    return children


def count_subtrees(trimmed: TrimmedTree, p: Vertex) -> int:
    """|Sub_p(T(X))| without enumerating it."""
    if p not in trimmed.vertices:
        raise BasepointNotInTrimmedTree(p)
    children = _rooted_children(trimmed, p)

    def count(v: Vertex) -> int:
        total = 1
        for w in children[v]:
            total *= 1 + count(w)
        return total

    return count(p)


def subtrees_containing(trimmed: TrimmedTree, p: Vertex) -> List[Subtree]:
    """
    Sub_p(T(X)): every connected edge subset of T(X) containing p, the empty
    subtree {p} included.

    Ordered by edge count and then by sorted edge listing, so {p} comes first
    and T(X) last.
    """
    if p not in trimmed.vertices:
        raise BasepointNotInTrimmedTree(p)
    children = _rooted_children(trimmed, p)

    def rooted_at(v: Vertex) -> List[FrozenSet[Edge]]:
        choices = []
        for w in children[v]:
            edge = edge_key(v, w)
            choices.append([frozenset()] + [below | {edge} for below in rooted_at(w)])
        return [frozenset().union(*combo) for combo in product(*choices)]

    edge_sets = rooted_at(p)
    edge_sets.sort(key=lambda edges: (len(edges), tuple(sorted(edges))))
    return [Subtree(edges, p) for edges in edge_sets]


def path_subtree(t: PointedTree, v: Vertex) -> Subtree:
    """The smallest subtree containing the basepoint and v."""
    if v not in t.vertices:
        raise UnknownVertex(v)
    path = nx.shortest_path(t.tree.to_networkx(), t.basepoint, v)
    return Subtree(frozenset(edge_key(a, b) for a, b in zip(path, path[1:])), t.basepoint)


def cell_of(subtree: Subtree, t: PointedTree) -> Cell:
    """
    Cell U_Y of a subtree Y.

    Args:
        subtree: Element of Sub_p(T(X))
        t: Pointed tree the subtree lives in

    Returns:
        Cell whose frontier is the edges of X outside Y incident on Y and
        whose dimension is the frontier size
    """
    vertices = subtree.vertex_set
    frontier = frozenset(
        edge for edge in t.edges
        if edge not in subtree.edge_set and (edge[0] in vertices or edge[1] in vertices)
    )
    return Cell(dimension=len(frontier), subtree=subtree, frontier=frontier)


def closure_intersection_dim(first: Cell, second: Cell, t: PointedTree) -> Optional[int]:
    """
    dim of the intersection of the closures of two cells, or None when the
    closures are disjoint.

    The closures are disjoint as soon as one subtree has an edge that is
    neither an edge of the other subtree nor incident on it. Otherwise the
    dimension is the number of edges of X outside both subtrees that are
    incident on their common subtree.
    """
    g, h = first.subtree, second.subtree
    g_vertices, h_vertices = g.vertex_set, h.vertex_set

    for edge in g.edge_set - h.edge_set:
        if edge[0] not in h_vertices and edge[1] not in h_vertices:
            return None
    for edge in h.edge_set - g.edge_set:
        if edge[0] not in g_vertices and edge[1] not in g_vertices:
            return None

    common_edges = g.edge_set & h.edge_set
    common_vertices = g_vertices & h_vertices
    if common_vertices != endpoints(common_edges) | {g.anchor}:
        raise InvariantViolation(
            "Common part of two subtrees through the basepoint is not a subtree",
            "intersection_connectivity",
            {"first": g.sorted_edges(), "second": h.sorted_edges()}
        )

    union_edges = g.edge_set | h.edge_set
    return sum(
        1 for edge in t.edges
        if edge not in union_edges and (edge[0] in common_vertices or edge[1] in common_vertices)
    )


def locate_cell(
    t: PointedTree,
    full_edges: Iterable[Edge],
    partial_edges: Iterable[Edge] = ()
) -> Subtree:
    """
    The largest element of Sub_p(T(X)) contained in a subcontinuum B.

    B is described by the edges of X it contains entirely plus the edges it
    meets in a proper sub-arc; each partial edge must touch the full part.
    """
    full = frozenset(edge_key(*edge) for edge in full_edges)
    partial = frozenset(edge_key(*edge) for edge in partial_edges)

    graph = nx.Graph()
    graph.add_node(t.basepoint)
    graph.add_edges_from(full)
    body = nx.node_connected_component(graph, t.basepoint)
    for v in sorted(graph.nodes):
        if v not in body:
            raise Disconnected(v)
    for u, v in sorted(partial):
        if u not in body and v not in body:
            raise Disconnected(u)

    trimmed = trimmed_tree(t)
    if t.basepoint not in trimmed.vertices:
        raise BasepointNotInTrimmedTree(t.basepoint)

    core = nx.Graph()
    core.add_node(t.basepoint)
    core.add_edges_from(edge for edge in full if edge in trimmed.edges)
    reachable = nx.node_connected_component(core, t.basepoint)
    return Subtree(
        frozenset(edge for edge in full if edge in trimmed.edges and edge[0] in reachable),
        t.basepoint
    )


def augment(t: PointedTree) -> Tuple[PointedTree, int]:
    """
    Attach max(0, 3 - ord(p)) pendant arcs at the basepoint so that p becomes
    a ramification point.

    Args:
        t: Pointed tree of any basepoint order

    Returns:
        Tuple of the augmented tree and the number of arcs attached. The tree
        is returned unchanged when p already has order 3 or more.
    """
    attached = max(0, 3 - t.basepoint_order)
    if attached == 0:
        return t, 0

    vertices = set(t.vertices)
    edges = set(t.edges)
    for _ in range(attached):
        leaf = fresh_vertex(vertices, f"{t.basepoint}_{ATTACHED_STEM}")
        vertices.add(leaf)
        edges.add(edge_key(t.basepoint, leaf))

    logger.debug(f"Attached {attached} arcs at basepoint {t.basepoint!r}")
    return PointedTree(Tree(frozenset(vertices), frozenset(edges)), t.basepoint), attached


def build_complex(t: PointedTree, cap: Optional[int] = None) -> CellComplex:
    """
    One cell per element of Sub_p(T(X)) plus the closure-intersection table.

    Args:
        t: Pointed tree whose basepoint has order 3 or more
        cap: Largest allowed cell count, COMPLEX_CELL_CAP when omitted

    Returns:
        CellComplex with cells ordered by subtree size, {p} first

    Raises:
        NeedsAugmentation: basepoint order below 3
        ComplexTooLarge: more subtrees than the configured cap
    """
    order = order_of(t.basepoint, t)
    if order < 3:
        raise NeedsAugmentation(t.basepoint, order)

    cap = cap or settings.COMPLEX_CELL_CAP
    trimmed = trimmed_tree(t)
    total = count_subtrees(trimmed, t.basepoint)
    if total > cap:
        raise ComplexTooLarge(cap)

    cells = tuple(cell_of(subtree, t) for subtree in subtrees_containing(trimmed, t.basepoint))
    intersections: Dict[Tuple[int, int], int] = {}
    for i, j in combinations(range(len(cells)), 2):
        dim = closure_intersection_dim(cells[i], cells[j], t)
        if dim is not None:
            intersections[(i, j)] = dim

    logger.debug(f"Built complex with {len(cells)} cells and {len(intersections)} meeting pairs")
    return CellComplex(cells=cells, intersections=intersections, basepoint_order=order, attached=0)


def build_augmented_complex(t: PointedTree, cap: Optional[int] = None) -> CellComplex:
    """Augment when needed and record the original basepoint order with the complex."""
    augmented, attached = augment(t)
    built = build_complex(augmented, cap)
    return CellComplex(
        cells=built.cells,
        intersections=built.intersections,
        basepoint_order=t.basepoint_order,
        attached=attached
    )
