"""
Complex JSON:
{"ord_basepoint": k, "attached": j,
 "cells": [{"id": 0, "dim": 3, "edges": [["p", "a"], ...]}, ...],
 "intersections": [[0, 1, 2], ...]}
"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.models.complex import Cell, CellComplex, Subtree

BASE_ANCHOR = "p"


class CellDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: int = Field(ge=0)
    dim: int = Field(ge=0)
    edges: Optional[List[List[str]]] = None

    @field_validator("edges", mode="before")
    @classmethod
    def coerce_edges(cls, value):
        if value is None:
            return value
        return [[str(u), str(v)] for u, v in value]


class ComplexDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ord_basepoint: int = Field(default=0, ge=0)
    attached: int = Field(default=0, ge=0, le=2)
    cells: List[CellDocument]
    intersections: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_tables(self):
        if self.ord_basepoint and self.attached != max(0, 3 - self.ord_basepoint):
            raise ValueError(
                f"attached must be {max(0, 3 - self.ord_basepoint)} for ord_basepoint {self.ord_basepoint}, got {self.attached}"
            )
        ids = [cell.id for cell in self.cells]
        if sorted(ids) != list(range(len(ids))):
            raise ValueError("cell ids must be 0..n-1 without gaps or repeats")
        seen = set()
        for triple in self.intersections:
            if len(triple) != 3:
                raise ValueError(f"intersection {triple!r} must be a triple [i, j, dim]")
            i, j, dim = triple
            if not (0 <= i < j < len(ids)):
                raise ValueError(f"intersection {triple!r} must satisfy 0 <= i < j < {len(ids)}")
            if dim < 0:
                raise ValueError(f"intersection {triple!r} has a negative dimension")
            if (i, j) in seen:
                raise ValueError(f"intersection ({i}, {j}) listed twice")
            seen.add((i, j))
        return self


def complex_to_document(c: CellComplex) -> ComplexDocument:
    cells = []
    for index, cell in enumerate(c.cells):
        edges = None
        if cell.subtree is not None:
            edges = [list(edge) for edge in cell.subtree.sorted_edges()]
        cells.append(CellDocument(id=index, dim=cell.dimension, edges=edges))
    return ComplexDocument(
        ord_basepoint=c.basepoint_order,
        attached=c.attached,
        cells=cells,
        intersections=[[i, j, dim] for i, j, dim in c.pairs()],
    )


def complex_from_document(document: ComplexDocument, anchor: str = BASE_ANCHOR) -> CellComplex:
    """
    Rebuild a CellComplex; edge listings, when present, become subtree labels.

    Args:
        document: validated Complex JSON
        anchor: basepoint of the tree the complex belongs to; it anchors the
            empty subtree {p}
    """
    ordered = sorted(document.cells, key=lambda cell: cell.id)
    cells = []
    for cell in ordered:
        subtree = None
        if cell.edges is not None:
            subtree = Subtree(frozenset(tuple(sorted(edge)) for edge in cell.edges), anchor)
        cells.append(Cell(dimension=cell.dim, subtree=subtree))
    return CellComplex(
        cells=tuple(cells),
        intersections={(i, j): dim for i, j, dim in document.intersections},
        basepoint_order=document.ord_basepoint,
        attached=document.attached,
    )
