"""
Repository for Tree JSON documents.
"""
from pathlib import Path
from typing import Union

from src.models.tree import PointedTree, Tree
from src.schemas import TreeDocument, tree_to_document, tree_from_document, free_tree_from_document
from .base_repository import BaseRepository


class TreeRepository(BaseRepository[TreeDocument]):
    """Reads pointed trees and free trees, writes either."""

    def __init__(self):
        super().__init__(TreeDocument)

    def load_pointed(self, path: Union[str, Path]) -> PointedTree:
        return tree_from_document(self.load(path))

    def load_free(self, path: Union[str, Path]) -> Tree:
        return free_tree_from_document(self.load(path))

    def render(self, t) -> str:
        return self.dump(tree_to_document(t))
