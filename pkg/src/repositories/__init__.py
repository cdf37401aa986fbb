"""
Repository layer for reading and writing JSON documents.
"""
from .base_repository import BaseRepository
from .tree_repository import TreeRepository
from .complex_repository import ComplexRepository

__all__ = [
    "BaseRepository",
    "TreeRepository",
    "ComplexRepository"
]
