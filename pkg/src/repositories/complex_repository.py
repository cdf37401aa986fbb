"""
Repository for Complex JSON documents.
"""
from pathlib import Path
from typing import Union

from src.models.complex import CellComplex
from src.models.tree import Vertex
from src.schemas import ComplexDocument, complex_to_document, complex_from_document
from src.schemas.complex_schema import BASE_ANCHOR
from .base_repository import BaseRepository


class ComplexRepository(BaseRepository[ComplexDocument]):

    def __init__(self):
        super().__init__(ComplexDocument)

    def load_complex(self, path: Union[str, Path], anchor: Vertex = BASE_ANCHOR) -> CellComplex:
        """Load a complex whose subtree labels are anchored at ``anchor``."""
        return complex_from_document(self.load(path), anchor)

    def render(self, c: CellComplex) -> str:
        return self.dump(complex_to_document(c))
