"""
Tree JSON: {"vertices": [...optional...], "edges": [["a", "b"], ...], "basepoint": "a"}
"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from src.exceptions import InputFormatError
from src.models.tree import PointedTree, Tree
from src.services.tree_model import build_tree


def _as_id(value) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValueError(f"vertex id must be a string or integer, got {value!r}")
    return str(value)


class TreeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vertices: Optional[List[str]] = None
    edges: List[List[str]]
    basepoint: Optional[str] = None

    @field_validator("vertices", mode="before")
    @classmethod
    def coerce_vertices(cls, value):
        if value is None:
            return value
        return [_as_id(v) for v in value]

    @field_validator("edges", mode="before")
    @classmethod
    def coerce_edges(cls, value):
        edges = []
        for pair in value:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValueError(f"edge {pair!r} must be a pair of vertex ids")
            edges.append([_as_id(pair[0]), _as_id(pair[1])])
        return edges

    @field_validator("basepoint", mode="before")
    @classmethod
    def coerce_basepoint(cls, value):
        return None if value is None else _as_id(value)


def tree_to_document(t) -> TreeDocument:
    """Serialize a PointedTree, or a bare Tree with no basepoint."""
    tree = t.tree if isinstance(t, PointedTree) else t
    return TreeDocument(
        vertices=sorted(tree.vertices),
        edges=[list(edge) for edge in tree.sorted_edges()],
        basepoint=t.basepoint if isinstance(t, PointedTree) else None,
    )


def tree_from_document(document: TreeDocument, basepoint: Optional[str] = None) -> PointedTree:
    """
    Validate a document into a PointedTree.

    Args:
        document: parsed Tree JSON
        basepoint: overrides the document's basepoint

    Raises:
        InputFormatError: neither the document nor the caller names a basepoint
    """
    point = basepoint if basepoint is not None else document.basepoint
    if point is None:
        raise InputFormatError("basepoint: Field required for a pointed tree")
    return build_tree(document.edges, point, document.vertices)


def free_tree_from_document(document: TreeDocument) -> Tree:
    """Validate a document into a Tree; any basepoint it carries is ignored."""
    ids = {v for edge in document.edges for v in edge} | set(document.vertices or ())
    anchor = min(ids) if ids else ""
    return build_tree(document.edges, anchor, document.vertices).tree
