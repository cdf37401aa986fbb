"""
Tree, pointed tree and canonical code value types.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Tuple

import networkx as nx

Vertex = str
Edge = Tuple[Vertex, Vertex]


def edge_key(u: Vertex, v: Vertex) -> Edge:
    """Order-independent key for the undirected edge uv."""
    return (u, v) if u <= v else (v, u)


def endpoints(edges: Iterable[Edge]) -> FrozenSet[Vertex]:
    return frozenset(v for edge in edges for v in edge)


@dataclass(frozen=True)
class Tree:
    """
    Finite tree given by its vertex and edge sets.

    Validation lives in ``tree_model.build_tree``; constructing a Tree directly
    assumes the caller already holds a valid tree.
    """
    vertices: FrozenSet[Vertex]
    edges: FrozenSet[Edge]

    @cached_property
    def adjacency(self) -> Dict[Vertex, Tuple[Vertex, ...]]:
        neighbours: Dict[Vertex, list] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in neighbours.items()}

    def degree(self, v: Vertex) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> FrozenSet[Vertex]:
        return frozenset(v for v, ns in self.adjacency.items() if len(ns) == 1)

    def ramification_points(self) -> FrozenSet[Vertex]:
        return frozenset(v for v, ns in self.adjacency.items() if len(ns) >= 3)

    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.vertices))
        graph.add_edges_from(self.sorted_edges())
        return graph

    def __repr__(self):
        return f"<Tree(vertices={len(self.vertices)}, edges={self.sorted_edges()})>"


@dataclass(frozen=True)
class PointedTree:
    """The pair (X, p): a tree with a distinguished basepoint."""
    tree: Tree
    basepoint: Vertex

    @property
    def vertices(self) -> FrozenSet[Vertex]:
        return self.tree.vertices

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self.tree.edges

    @property
    def adjacency(self) -> Dict[Vertex, Tuple[Vertex, ...]]:
        return self.tree.adjacency

    def degree(self, v: Vertex) -> int:
        return self.tree.degree(v)

    @property
    def basepoint_order(self) -> int:
        return self.tree.degree(self.basepoint)

    def __repr__(self):
        return f"<PointedTree(basepoint={self.basepoint!r}, edges={self.tree.sorted_edges()})>"


class VertexKind(Enum):
    """Point types of a finite graph by order"""
    END = "end"
    ORDINARY = "ordinary"
    RAMIFICATION = "ramification"


@dataclass(frozen=True)
class VertexClass:
    kind: VertexKind
    order: int

    @classmethod
    def from_order(cls, order: int) -> "VertexClass":
        if order == 1:
            return cls(VertexKind.END, order)
        if order == 2:
            return cls(VertexKind.ORDINARY, order)
        return cls(VertexKind.RAMIFICATION, order)


class TreeClass(Enum):
    """Arcs, simple n-ods and every other tree"""
    ARC = "arc"
    SIMPLE_N_OD = "simple_n_od"
    GENERAL = "general"


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """
    Nested-parentheses encoding of a rooted tree.

    Every vertex is written as "(" + sorted child codes + ")". Codes rooted at
    the formal midpoint of an edge are wrapped in "[" and "]" instead, so they
    never collide with vertex-rooted codes.
    """
    code: str

    def __str__(self):
        return self.code
