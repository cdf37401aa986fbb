"""
Cell decomposition value types: trimmed tree, subtrees, cells and the complex.
"""
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Tuple

from .tree import Edge, Vertex, endpoints


@dataclass(frozen=True)
class TrimmedTree:
    """
    T(X): the union of edges of X that meet no end point.

    ``vertices`` is empty for an arc and a single vertex for a simple n-od.
    """
    vertices: FrozenSet[Vertex]
    edges: FrozenSet[Edge]

    def degree(self, v: Vertex) -> int:
        return sum(1 for edge in self.edges if v in edge)

    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))


@dataclass(frozen=True)
class Subtree:
    """An element of Sub_p(T(X)); the empty edge set stands for {p}."""
    edge_set: FrozenSet[Edge]
    anchor: Vertex

    @property
    def vertex_set(self) -> FrozenSet[Vertex]:
        return endpoints(self.edge_set) | {self.anchor}

    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edge_set))

    def __repr__(self):
        return f"<Subtree(anchor={self.anchor!r}, edges={self.sorted_edges()})>"


@dataclass(frozen=True)
class Cell:
    """
    The component U_Y of the manifold part of C(p,X).

    Abstract cells read from foreign complexes carry no subtree and an empty
    frontier; only their dimension is known.
    """
    dimension: int
    subtree: Optional[Subtree] = None
    frontier: FrozenSet[Edge] = frozenset()


@dataclass(frozen=True)
class CellComplex:
    """
    Cells of C(p,X) plus the closure-intersection dimension table.

    ``intersections`` is keyed by (i, j) with i < j and holds only pairs whose
    closures meet.
    """
    cells: Tuple[Cell, ...]
    intersections: Mapping[Tuple[int, int], int] = field(default_factory=dict)
    basepoint_order: int = 0
    attached: int = 0

    def __len__(self):
        return len(self.cells)

    @property
    def dimensions(self) -> Tuple[int, ...]:
        return tuple(cell.dimension for cell in self.cells)

    def intersection(self, i: int, j: int) -> Optional[int]:
        if i == j:
            return self.cells[i].dimension
        key = (i, j) if i < j else (j, i)
        return self.intersections.get(key)

    def pairs(self) -> Iterator[Tuple[int, int, int]]:
        for (i, j), dim in sorted(self.intersections.items()):
            yield i, j, dim

    def strip(self) -> "CellComplex":
        """Abstract copy: dimensions and intersections only."""
        return replace(
            self,
            cells=tuple(Cell(dimension=cell.dimension) for cell in self.cells),
            intersections=dict(self.intersections),
        )

    def with_dimension(self, index: int, dimension: int) -> "CellComplex":
        cells = list(self.cells)
        cells[index] = replace(cells[index], dimension=dimension)
        return replace(self, cells=tuple(cells))

    def without_intersection(self, i: int, j: int) -> "CellComplex":
        key = (i, j) if i < j else (j, i)
        table: Dict[Tuple[int, int], int] = dict(self.intersections)
        table.pop(key, None)
        return replace(self, intersections=table)
