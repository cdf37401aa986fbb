# Tree, complex, reconstruction and verification services package

from .tree_model import (
    build_tree, normalize, normalize_free, canonical_code, rooted_isomorphic, orbits,
    homogeneity_degree, enumerate_trees, enumerate_pointed
)
from .hyperspace_complex import trimmed_tree, subtrees_containing, augment, build_complex, build_augmented_complex
from .reconstruction import base_cell, hasse, path_cells, reconstruct, signature, same_hyperspace, deaugment

__all__ = [
    'build_tree',
    'normalize',
    'normalize_free',
    'canonical_code',
    'rooted_isomorphic',
    'orbits',
    'homogeneity_degree',
    'enumerate_trees',
    'enumerate_pointed',
    'trimmed_tree',
    'subtrees_containing',
    'augment',
    'build_complex',
    'build_augmented_complex',
    'base_cell',
    'hasse',
    'path_cells',
    'reconstruct',
    'signature',
    'same_hyperspace',
    'deaugment'
]
