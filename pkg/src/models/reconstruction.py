"""
Hasse diagram and hyperspace signature value types.
"""
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from .tree import CanonicalCode


@dataclass(frozen=True)
class HasseDiagram:
    """
    Covering relation of a cell complex.

    ``covers`` maps (smaller cell, larger cell) to the order of the vertex the
    larger subtree adds: dim(larger) - dim(smaller) + 2.
    """
    nodes: Tuple[int, ...]
    covers: Mapping[Tuple[int, int], int]
    base: int

    def lower_covers(self, j: int) -> Tuple[int, ...]:
        return tuple(sorted(i for (i, k) in self.covers if k == j))

    def in_degrees(self) -> Dict[int, int]:
        degrees = {node: 0 for node in self.nodes}
        for _, j in self.covers:
            degrees[j] += 1
        return degrees


@dataclass(frozen=True, order=True)
class Signature:
    """Complete invariant of C(p,X) within the class of trees."""
    basepoint_order: int
    attached_count: int
    code: CanonicalCode

    def as_tuple(self) -> Tuple[int, int, str]:
        return self.basepoint_order, self.attached_count, self.code.code
