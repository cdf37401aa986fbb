"""
Tree Model Services

Validation of edge lists into pointed trees, suppression of degree-2 vertices,
AHU canonical codes for rooted trees, automorphism orbits through those codes,
and exhaustive enumeration of small topological trees and pointed trees.
"""

import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from src.exceptions import (
    TreeValidationError, CycleDetected, Disconnected, BasepointMissing,
    DuplicateEdge, SelfLoop, EmptyTree, UnknownVertex
)
from src.models.tree import (
    Vertex, Edge, edge_key, endpoints, Tree, PointedTree,
    VertexClass, TreeClass, CanonicalCode
)

logger = logging.getLogger(__name__)

MIDPOINT_STEM = "m"


class TreeOrbits(NamedTuple):
    """Vertex and edge orbits of a tree under its automorphism group"""
    vertex_orbits: Tuple[FrozenSet[Vertex], ...]
    edge_orbits: Tuple[FrozenSet[Edge], ...]


def build_tree(
    edge_pairs: Iterable[Sequence],
    basepoint,
    vertices: Optional[Iterable] = None
) -> PointedTree:
    """
    Validate an edge list and return the pointed tree it describes.

    Args:
        edge_pairs: Unordered vertex pairs; ids are coerced to strings
        basepoint: The distinguished vertex p
        vertices: Optional explicit vertex list; must not add isolated vertices

    Returns:
        Validated PointedTree

    Raises:
        EmptyTree, SelfLoop, DuplicateEdge, CycleDetected, BasepointMissing,
        Disconnected: each naming the offending element
    """
    pairs = list(edge_pairs)
    if not pairs:
        raise EmptyTree()

    seen = set()
    components = UnionFind()
    for pair in pairs:
        if len(pair) != 2:
            raise TreeValidationError(f"Edge {pair!r} must join exactly two vertices", "malformed_edge", pair)
        u, v = str(pair[0]), str(pair[1])
        if u == v:
            raise SelfLoop(u)
        key = edge_key(u, v)
        if key in seen:
            raise DuplicateEdge(key)
        if components[u] == components[v]:
            raise CycleDetected(key)
        components.union(u, v)
        seen.add(key)

    vertex_set = set(endpoints(seen))
    if vertices is not None:
        vertex_set.update(str(v) for v in vertices)

    basepoint = str(basepoint)
    if basepoint not in vertex_set:
        raise BasepointMissing(basepoint)

    graph = nx.Graph()
    graph.add_nodes_from(vertex_set)
    graph.add_edges_from(seen)
    reached = nx.node_connected_component(graph, basepoint)
    for v in sorted(vertex_set):
        if v not in reached:
            raise Disconnected(v)

    return PointedTree(Tree(frozenset(vertex_set), frozenset(seen)), basepoint)


def normalize(t: PointedTree) -> PointedTree:
    """Suppress every degree-2 vertex except the basepoint."""
    adjacency = {v: set(ns) for v, ns in t.adjacency.items()}
    suppressible = [v for v in sorted(adjacency) if v != t.basepoint and len(adjacency[v]) == 2]
    if not suppressible:
        return t

    for v in suppressible:
        u, w = sorted(adjacency.pop(v))
        adjacency[u].discard(v)
        adjacency[w].discard(v)
        adjacency[u].add(w)
        adjacency[w].add(u)

    edges = frozenset(edge_key(u, w) for u, ns in adjacency.items() for w in ns)
    logger.debug(f"Suppressed {len(suppressible)} degree-2 vertices")
    return PointedTree(Tree(frozenset(adjacency), edges), t.basepoint)


def normalize_free(tree: Tree) -> Tree:
    """Suppress every degree-2 vertex of an unpointed tree."""
    leaf = min(tree.leaves())
    return normalize(PointedTree(tree, leaf)).tree


def _encode(adjacency: Mapping[Vertex, Sequence[Vertex]], root: Vertex, excluded: Optional[Vertex] = None) -> str:
    """AHU code of the component of ``root`` after cutting the edge to ``excluded``."""
    parent: Dict[Vertex, Optional[Vertex]] = {root: excluded}
    order: List[Vertex] = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adjacency[v]:
            if w != parent[v]:
                parent[w] = v
                stack.append(w)

    codes: Dict[Vertex, str] = {}
    for v in reversed(order):
        children = sorted(codes.pop(w) for w in adjacency[v] if w != parent[v])
        codes[v] = "(" + "".join(children) + ")"
    return codes[root]


def rooted_code(tree: Tree, root: Vertex) -> CanonicalCode:
    """
    AHU code of the tree rooted at a vertex.

    Args:
        tree: Tree to encode
        root: Vertex to hang the tree from

    Returns:
        CanonicalCode; two rooted trees are isomorphic iff their codes match

    Raises:
        UnknownVertex: root is not a vertex of the tree
    """
    if root not in tree.vertices:
        raise UnknownVertex(root)
    return CanonicalCode(_encode(tree.adjacency, root))


def midpoint_code(tree: Tree, edge: Edge) -> CanonicalCode:
    """Code of the tree rooted at a formal subdivision point of ``edge``."""
    u, v = edge
    halves = sorted([_encode(tree.adjacency, u, v), _encode(tree.adjacency, v, u)])
    return CanonicalCode("[" + "".join(halves) + "]")


def canonical_code(t: PointedTree) -> CanonicalCode:
    """Rooted AHU code of (X, p); equal codes iff rooted-isomorphic."""
    return rooted_code(t.tree, t.basepoint)


def free_canonical_code(tree: Tree) -> CanonicalCode:
    """Code of the unrooted tree: rooted at the center, or at the central edge's midpoint."""
    centers = sorted(nx.center(tree.to_networkx()))
    if len(centers) == 1:
        return rooted_code(tree, centers[0])
    return midpoint_code(tree, edge_key(centers[0], centers[1]))


def rooted_isomorphic(a: PointedTree, b: PointedTree) -> bool:
    return canonical_code(a) == canonical_code(b)


def classify_vertex(v: Vertex, t: PointedTree) -> VertexClass:
    """End point, ordinary point or ramification point, by order."""
    if v not in t.vertices:
        raise UnknownVertex(v)
    return VertexClass.from_order(t.degree(v))


def tree_class(tree: Tree) -> TreeClass:
    """Arc, simple n-od or neither, read off the number of ramification points."""
    ramification = len(tree.ramification_points())
    if ramification == 0:
        return TreeClass.ARC
    if ramification == 1:
        return TreeClass.SIMPLE_N_OD
    return TreeClass.GENERAL


def fresh_vertex(vertices: Iterable[Vertex], stem: str) -> Vertex:
    taken = set(vertices)
    if stem not in taken:
        return stem
    suffix = 1
    while f"{stem}{suffix}" in taken:
        suffix += 1
    return f"{stem}{suffix}"


def subdivide_edge(tree: Tree, u: Vertex, v: Vertex, stem: str = MIDPOINT_STEM) -> PointedTree:
    """Place a fresh degree-2 basepoint in the interior of the edge uv."""
    key = edge_key(str(u), str(v))
    if key not in tree.edges:
        raise TreeValidationError(f"Edge {key} is not an edge of the tree", "unknown_edge", key)
    midpoint = fresh_vertex(tree.vertices, stem)
    edges = (tree.edges - {key}) | {edge_key(key[0], midpoint), edge_key(midpoint, key[1])}
    return PointedTree(Tree(tree.vertices | {midpoint}, frozenset(edges)), midpoint)


def relabel(t: PointedTree, mapping: Mapping[Vertex, Vertex]) -> PointedTree:
    """Rename vertices through an injective mapping covering every vertex."""
    renamed = {v: str(mapping[v]) for v in t.vertices}
    if len(set(renamed.values())) != len(renamed):
        raise TreeValidationError("Relabeling must be injective", "non_injective_relabel", None)
    edges = frozenset(edge_key(renamed[u], renamed[v]) for u, v in t.edges)
    return PointedTree(Tree(frozenset(renamed.values()), edges), renamed[t.basepoint])


def orbits(tree: Tree) -> TreeOrbits:
    """
    Orbits of the automorphism group on vertices and on edges.

    Two vertices share an orbit iff the codes rooted at them agree; two edges
    share an orbit iff their midpoint-rooted codes agree.
    """
    vertex_groups: Dict[CanonicalCode, set] = {}
    for v in tree.vertices:
        vertex_groups.setdefault(rooted_code(tree, v), set()).add(v)

    edge_groups: Dict[CanonicalCode, set] = {}
    for edge in tree.edges:
        edge_groups.setdefault(midpoint_code(tree, edge), set()).add(edge)

    return TreeOrbits(
        vertex_orbits=tuple(frozenset(vertex_groups[code]) for code in sorted(vertex_groups)),
        edge_orbits=tuple(frozenset(edge_groups[code]) for code in sorted(edge_groups)),
    )


def homogeneity_degree(tree: Tree) -> int:
    """Number of point classes of the topological tree: vertex orbits plus edge orbits."""
    tree_orbits = orbits(tree)
    return len(tree_orbits.vertex_orbits) + len(tree_orbits.edge_orbits)


def _grow(level: Dict[CanonicalCode, Tree]) -> Dict[CanonicalCode, Tree]:
    """All trees with one more vertex, one per free isomorphism class."""
    grown: Dict[CanonicalCode, Tree] = {}
    for code in sorted(level):
        tree = level[code]
        representatives: Dict[CanonicalCode, Vertex] = {}
        for v in sorted(tree.vertices):
            representatives.setdefault(rooted_code(tree, v), v)

        leaf = str(len(tree.vertices))
        for v in representatives.values():
            candidate = Tree(tree.vertices | {leaf}, tree.edges | {edge_key(v, leaf)})
            grown.setdefault(free_canonical_code(candidate), candidate)
    return grown


def enumerate_trees(max_edges: int) -> Iterator[Tree]:
    """
    Yield one tree per free isomorphism class with 1..max_edges edges and no
    degree-2 vertices, ordered by edge count and then by canonical code.
    """
    if max_edges < 1:
        raise ValueError(f"max_edges must be >= 1, got {max_edges}")

    arc = Tree(frozenset({"0", "1"}), frozenset({("0", "1")}))
    level = {free_canonical_code(arc): arc}
    for edge_count in range(1, max_edges + 1):
        if edge_count > 1:
            level = _grow(level)
        emitted = 0
        for code in sorted(level):
            tree = level[code]
            if all(tree.degree(v) != 2 for v in tree.vertices):
                emitted += 1
                yield tree
        logger.debug(f"{edge_count} edges: {len(level)} free trees, {emitted} without degree-2 vertices")


def enumerate_pointed(max_edges: int) -> Iterator[PointedTree]:
    """
    Yield one pointed tree per point class of every enumerated tree: a vertex
    basepoint per vertex orbit and a subdivision basepoint per edge orbit.
    """
    for tree in enumerate_trees(max_edges):
        tree_orbits = orbits(tree)
        for orbit in tree_orbits.vertex_orbits:
            yield PointedTree(tree, min(orbit))
        for orbit in tree_orbits.edge_orbits:
            u, v = min(orbit)
            yield subdivide_edge(tree, u, v)
