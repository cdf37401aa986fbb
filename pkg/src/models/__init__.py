"""
Domain models for trees, cell complexes and verification reports.
"""
from .tree import (
    Vertex, Edge, edge_key, endpoints, Tree, PointedTree,
    VertexKind, VertexClass, TreeClass, CanonicalCode
)
from .complex import TrimmedTree, Subtree, Cell, CellComplex
from .reconstruction import HasseDiagram, Signature
from .report import CheckResult, VerificationReport

__all__ = [
    "Vertex",
    "Edge",
    "edge_key",
    "endpoints",
    "Tree",
    "PointedTree",
    "VertexKind",
    "VertexClass",
    "TreeClass",
    "CanonicalCode",
    "TrimmedTree",
    "Subtree",
    "Cell",
    "CellComplex",
    "HasseDiagram",
    "Signature",
    "CheckResult",
    "VerificationReport"
]
