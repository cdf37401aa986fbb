"""
Reconstruction of (X, p) from the abstract cell complex of C(p,X).

Only cell dimensions and closure-intersection dimensions are read; subtree
labels carried by a complex are ignored.
"""

import logging
from typing import Dict, List, Tuple

import networkx as nx

from src.exceptions import AmbiguousBase, MalformedComplex, InvariantViolation
from src.models.tree import Vertex, edge_key, PointedTree, Tree
from src.models.complex import CellComplex
from src.models.reconstruction import HasseDiagram, Signature
from src.services.tree_model import build_tree, normalize, canonical_code
from src.services.hyperspace_complex import augment, build_complex

logger = logging.getLogger(__name__)

BASE_VERTEX = "p"


def base_cell(c: CellComplex) -> int:
    """The unique cell of minimum dimension, U_{p}."""
    if not c.cells:
        raise MalformedComplex("Complex has no cells")
    dims = c.dimensions
    lowest = min(dims)
    candidates = [i for i, dim in enumerate(dims) if dim == lowest]
    if len(candidates) > 1:
        raise AmbiguousBase(candidates, lowest)
    return candidates[0]


def hasse(c: CellComplex) -> HasseDiagram:
    """
    Covering relation: i -> j iff the closures meet in dimension dim(i) - 1.

    Each cover is labelled with dim(j) - dim(i) + 2, the order in X of the
    vertex the larger subtree adds.

    Returns:
        HasseDiagram rooted at the base cell

    Raises:
        MalformedComplex: inconsistent covers, or a cell unreachable from
            the base cell
    """
    base = base_cell(c)
    dims = c.dimensions
    covers: Dict[Tuple[int, int], int] = {}

    for i, j, meet in c.pairs():
        if not (0 <= i < len(dims) and 0 <= j < len(dims)):
            raise MalformedComplex(f"Intersection ({i}, {j}) names a missing cell", pair=(i, j))
        forward = meet == dims[i] - 1
        backward = meet == dims[j] - 1
        if forward and backward:
            raise MalformedComplex(f"Pair ({i}, {j}) covers in both directions", pair=(i, j))
        if not (forward or backward):
            continue
        lower, upper = (i, j) if forward else (j, i)
        label = dims[upper] - dims[lower] + 2
        if label < 3:
            raise MalformedComplex(
                f"Cover {lower} -> {upper} implies a new vertex of order {label} < 3",
                pair=(lower, upper), label=label
            )
        covers[(lower, upper)] = label

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(dims)))
    graph.add_edges_from(covers)
    unreachable = sorted(set(graph.nodes) - nx.descendants(graph, base) - {base})
    if unreachable:
        raise MalformedComplex(
            f"Cells {unreachable} are not reachable from the base cell {base}",
            unreachable=unreachable
        )

    return HasseDiagram(nodes=tuple(range(len(dims))), covers=covers, base=base)


def path_cells(diagram: HasseDiagram) -> List[int]:
    """The base cell plus every cell covering exactly one cell."""
    in_degrees = diagram.in_degrees()
    return [diagram.base] + [
        node for node in diagram.nodes
        if node != diagram.base and in_degrees[node] == 1
    ]


def reconstruct(c: CellComplex) -> PointedTree:
    """
    Rebuild the pointed tree whose complex is ``c``.

    Path cells stand for the vertices of T(X); each joins the vertex of the
    unique cell it covers. A vertex's order in X is its incoming cover label
    (the base dimension for the basepoint), and the difference with its
    degree in T(X) is the number of end points hanging from it.

    Args:
        c: Abstract complex; only dimensions and intersections are read

    Returns:
        Normalized PointedTree with basepoint "p" and vertices named after
        their cells

    Raises:
        AmbiguousBase: several cells share the minimum dimension
        MalformedComplex: the covers do not describe a tree
    """
    diagram = hasse(c)
    dims = c.dimensions
    cells = path_cells(diagram)
    names: Dict[int, Vertex] = {
        cell: BASE_VERTEX if cell == diagram.base else f"v{cell}" for cell in cells
    }

    orders: Dict[Vertex, int] = {BASE_VERTEX: dims[diagram.base]}
    trimmed_edges = []
    for cell in cells:
        if cell == diagram.base:
            continue
        (parent,) = diagram.lower_covers(cell)
        if parent not in names:
            raise MalformedComplex(f"Path cell {cell} covers the non-path cell {parent}", cell=cell)
        trimmed_edges.append(edge_key(names[parent], names[cell]))
        orders[names[cell]] = diagram.covers[(parent, cell)]

    trimmed_degree = {name: 0 for name in orders}
    for u, v in trimmed_edges:
        trimmed_degree[u] += 1
        trimmed_degree[v] += 1

    edges = list(trimmed_edges)
    for name in sorted(orders):
        pendant = orders[name] - trimmed_degree[name]
        if pendant < 0:
            raise MalformedComplex(
                f"Vertex {name} has order {orders[name]} below its degree {trimmed_degree[name]} in T(X)",
                vertex=name
            )
        edges.extend(edge_key(name, f"{name}.{k}") for k in range(1, pendant + 1))

    logger.debug(f"Reconstructed {len(cells)} vertices of T(X) and {len(edges)} edges of X")
    return normalize(build_tree(edges, BASE_VERTEX))


def _pendant_leaves(t: PointedTree) -> List[Vertex]:
    return sorted(v for v in t.adjacency[t.basepoint] if t.degree(v) == 1)


def deaugment(t: PointedTree, attached_count: int) -> PointedTree:
    """
    Delete ``attached_count`` pendant edges at the basepoint and normalize.

    Any choice of pendant edges gives the same rooted class, so the smallest
    leaf ids are removed.

    Raises:
        InvariantViolation: the basepoint carries fewer pendant edges than requested
    """
    if attached_count == 0:
        return t
    pendant = _pendant_leaves(t)
    if len(pendant) < attached_count:
        raise InvariantViolation(
            f"Basepoint carries {len(pendant)} pendant edges, {attached_count} requested",
            "deaugment_pendants",
            {"basepoint": t.basepoint}
        )
    removed = set(pendant[:attached_count])
    edges = frozenset(edge for edge in t.edges if not (set(edge) & removed))
    tree = Tree(t.vertices - removed, edges)
    return normalize(PointedTree(tree, t.basepoint))


def reconstruct_original(c: CellComplex) -> PointedTree:
    """
    Reconstruct the augmented pair and strip the arcs the complex says were attached.

    Raises:
        MalformedComplex: the complex claims more attached arcs than the
            reconstructed basepoint carries pendant edges
    """
    rebuilt = reconstruct(c)
    available = len(_pendant_leaves(rebuilt))
    if available < c.attached:
        raise MalformedComplex(
            f"Complex records {c.attached} attached arcs but the basepoint carries {available} pendant edges",
            attached=c.attached,
            pendant=available
        )
    return deaugment(rebuilt, c.attached)


def signature(t: PointedTree) -> Signature:
    """(ord(p), attached arcs, code of the tree reconstructed from the augmented complex)."""
    order = t.basepoint_order
    augmented, attached = augment(t)
    rebuilt = reconstruct(build_complex(augmented).strip())
    return Signature(basepoint_order=order, attached_count=attached, code=canonical_code(rebuilt))


def same_hyperspace(a: PointedTree, b: PointedTree) -> bool:
    return signature(a) == signature(b)
