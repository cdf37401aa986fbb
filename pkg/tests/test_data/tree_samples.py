"""
Small pointed trees with hand-computed complexes.

Each sample lists its edges, basepoint and the cell dimensions and closure
intersections its complex must have.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.models.tree import PointedTree
from src.services.tree_model import build_tree


@dataclass
class TreeSample:
    """A pointed tree with its expected complex."""
    name: str
    edges: List[Tuple[str, str]]
    basepoint: str
    dimensions: Optional[List[int]] = None
    intersections: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def pointed(self) -> PointedTree:
        return build_tree(self.edges, self.basepoint)

    def document(self) -> dict:
        return {"edges": [list(edge) for edge in self.edges], "basepoint": self.basepoint}


ARC_END = TreeSample("arc_end", [("a", "b")], "a")

STAR3 = TreeSample(
    "star3",
    [("c", "1"), ("c", "2"), ("c", "3")],
    "c",
    dimensions=[3],
)

STAR3_LEAF = TreeSample("star3_leaf", [("c", "1"), ("c", "2"), ("c", "3")], "1")

# Double star: p and a joined, two end points at each
F2 = TreeSample(
    "double_star",
    [("p", "a"), ("p", "p1"), ("p", "p2"), ("a", "a1"), ("a", "a2")],
    "p",
    dimensions=[3, 4],
    intersections={(0, 1): 2},
)

# Path p - a - b; p carries two end points, a one, b two
F3 = TreeSample(
    "path3",
    [("p", "a"), ("a", "b"), ("p", "p1"), ("p", "p2"), ("a", "a1"), ("b", "b1"), ("b", "b2")],
    "p",
    dimensions=[3, 4, 5],
    intersections={(0, 1): 2, (1, 2): 3},
)

# p with two ramification neighbours; Sub_p(T(X)) = {p}, {pa}, {pb}, {pa, pb}
FORK = TreeSample(
    "fork",
    [("p", "a"), ("p", "b"), ("p", "p1"), ("a", "a1"), ("a", "a2"), ("b", "b1"), ("b", "b2"), ("b", "b3")],
    "p",
    dimensions=[3, 4, 5, 6],
    intersections={(0, 1): 2, (0, 2): 2, (0, 3): 1, (1, 2): 1, (1, 3): 3, (2, 3): 4},
)

# p joined to three ramification points and carrying no end point itself
CLAW = TreeSample(
    "claw",
    [("p", "a"), ("p", "b"), ("p", "c"), ("a", "a1"), ("a", "a2"), ("b", "b1"), ("b", "b2"), ("c", "c1"), ("c", "c2")],
    "p",
)

COMPLEX_SAMPLES = [STAR3, F2, F3, FORK]

# Series-reduced trees (no vertex of degree 2) by edge count, 1..9 edges
SERIES_REDUCED_COUNTS = [1, 0, 1, 1, 2, 2, 4, 5, 10]
