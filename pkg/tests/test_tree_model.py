"""
Unit tests for tree validation, canonical codes, orbits and enumeration
"""

from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from src.exceptions import (
    CycleDetected, Disconnected, BasepointMissing, DuplicateEdge, SelfLoop,
    EmptyTree, UnknownVertex, TreeValidationError
)
from src.models.tree import PointedTree, VertexKind, TreeClass, edge_key
from src.services.tree_model import (
    build_tree, normalize, normalize_free, canonical_code, rooted_code, free_canonical_code,
    rooted_isomorphic, classify_vertex, tree_class, subdivide_edge, relabel, orbits,
    homogeneity_degree, enumerate_trees, enumerate_pointed, fresh_vertex
)
from tests.test_data.tree_samples import ARC_END, STAR3, STAR3_LEAF, F2, F3, FORK, SERIES_REDUCED_COUNTS


class TestBuildTree:
    """Test cases for edge-list validation"""

    def test_valid_tree(self):
        t = build_tree([("p", "a"), ("a", "b")], "p")

        assert t.vertices == frozenset({"p", "a", "b"})
        assert t.edges == frozenset({("a", "p"), ("a", "b")})
        assert t.basepoint == "p"

    def test_integer_ids_are_coerced_to_strings(self):
        t = build_tree([(1, 2), (2, 3)], 1)

        assert t.vertices == frozenset({"1", "2", "3"})
        assert t.basepoint == "1"

    def test_empty_edge_list(self):
        with pytest.raises(EmptyTree):
            build_tree([], "p")

    def test_self_loop(self):
        with pytest.raises(SelfLoop) as excinfo:
            build_tree([("a", "a")], "a")
        assert excinfo.value.element == "a"

    def test_duplicate_edge_in_either_orientation(self):
        with pytest.raises(DuplicateEdge) as excinfo:
            build_tree([("a", "b"), ("b", "a")], "a")
        assert excinfo.value.element == ("a", "b")

    def test_cycle(self):
        with pytest.raises(CycleDetected) as excinfo:
            build_tree([("a", "b"), ("b", "c"), ("c", "a")], "a")
        assert excinfo.value.element == ("a", "c")

    def test_missing_basepoint(self):
        with pytest.raises(BasepointMissing):
            build_tree([("a", "b")], "z")

    def test_disconnected_components(self):
        with pytest.raises(Disconnected) as excinfo:
            build_tree([("a", "b"), ("c", "d")], "a")
        assert excinfo.value.element == "c"

    def test_isolated_vertex_from_explicit_list(self):
        with pytest.raises(Disconnected):
            build_tree([("a", "b")], "a", vertices=["a", "b", "z"])

    def test_malformed_pair(self):
        with pytest.raises(TreeValidationError) as excinfo:
            build_tree([("a", "b", "c")], "a")
        assert excinfo.value.error_code == "TREE_MALFORMED_EDGE"


class TestNormalize:
    """Test cases for degree-2 suppression"""

    def test_suppresses_interior_path_vertices(self):
        t = normalize(build_tree([("a", "b"), ("b", "c"), ("c", "d")], "a"))

        assert t.vertices == frozenset({"a", "d"})
        assert t.edges == frozenset({("a", "d")})

    def test_keeps_degree_two_basepoint(self):
        t = normalize(build_tree([("a", "b"), ("b", "c")], "b"))

        assert t.vertices == frozenset({"a", "b", "c"})
        assert t.basepoint_order == 2

    def test_already_normalized_tree_is_returned_unchanged(self):
        t = F3.pointed()
        assert normalize(t) is t

    def test_suppression_preserves_rooted_class(self):
        subdivided = build_tree(
            [("p", "x"), ("x", "a"), ("p", "p1"), ("p", "p2"), ("a", "a1"), ("a", "a2")], "p"
        )
        assert rooted_isomorphic(normalize(subdivided), F2.pointed())

    def test_normalize_free_tree(self):
        tree = build_tree([("a", "b"), ("b", "c"), ("c", "d"), ("c", "e")], "a").tree
        normalized = normalize_free(tree)

        assert all(normalized.degree(v) != 2 for v in normalized.vertices)
        assert len(normalized.edges) == 3


class TestCanonicalCode:
    """Test cases for AHU codes"""

    def test_star_codes(self):
        assert canonical_code(STAR3.pointed()).code == "(()()())"
        assert canonical_code(STAR3_LEAF.pointed()).code == "((()()))"

    def test_rooted_isomorphism_depends_on_basepoint(self):
        tree = F2.pointed().tree
        assert rooted_isomorphic(PointedTree(tree, "p"), PointedTree(tree, "a"))
        assert not rooted_isomorphic(PointedTree(tree, "p"), PointedTree(tree, "p1"))

    def test_relabeled_tree_has_same_code(self):
        t = F3.pointed()
        mapping = {v: f"x{i}" for i, v in enumerate(sorted(t.vertices))}
        assert canonical_code(relabel(t, mapping)) == canonical_code(t)

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(st.permutations(["p", "a", "b", "p1", "p2", "a1", "b1", "b2"]))
    def test_code_is_invariant_under_any_relabeling(self, names):
        t = F3.pointed()
        mapping = dict(zip(sorted(t.vertices), names))
        renamed = relabel(t, mapping)

        assert canonical_code(renamed) == canonical_code(t)
        assert free_canonical_code(renamed.tree) == free_canonical_code(t.tree)

    def test_free_code_of_bicentral_tree_uses_midpoint(self):
        code = free_canonical_code(F2.pointed().tree)
        assert code.code.startswith("[")

    def test_rooted_code_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            rooted_code(STAR3.pointed().tree, "zz")

    def test_non_injective_relabel_rejected(self):
        t = ARC_END.pointed()
        with pytest.raises(TreeValidationError):
            relabel(t, {"a": "x", "b": "x"})


class TestClassification:
    """Test cases for point and tree classes"""

    def test_classify_vertex(self):
        t = FORK.pointed()
        assert classify_vertex("b1", t).kind == VertexKind.END
        assert classify_vertex("b", t).kind == VertexKind.RAMIFICATION
        assert classify_vertex("b", t).order == 4

    def test_classify_degree_two_basepoint(self):
        t = subdivide_edge(ARC_END.pointed().tree, "a", "b")
        assert classify_vertex(t.basepoint, t).kind == VertexKind.ORDINARY

    def test_tree_class(self):
        assert tree_class(ARC_END.pointed().tree) == TreeClass.ARC
        assert tree_class(STAR3.pointed().tree) == TreeClass.SIMPLE_N_OD
        assert tree_class(F2.pointed().tree) == TreeClass.GENERAL

    def test_subdivide_edge(self):
        t = subdivide_edge(STAR3.pointed().tree, "1", "c")

        assert t.basepoint == "m"
        assert t.basepoint_order == 2
        assert t.edges == frozenset({("2", "c"), ("3", "c"), ("1", "m"), ("c", "m")})

    def test_subdivide_unknown_edge(self):
        with pytest.raises(TreeValidationError):
            subdivide_edge(STAR3.pointed().tree, "1", "2")

    def test_fresh_vertex_avoids_existing_ids(self):
        assert fresh_vertex({"m", "m1"}, "m") == "m2"
        assert fresh_vertex({"a"}, "m") == "m"


class TestOrbits:
    """Test cases for automorphism orbits and homogeneity degree"""

    def test_star_orbits(self):
        tree_orbits = orbits(STAR3.pointed().tree)

        assert frozenset({"c"}) in tree_orbits.vertex_orbits
        assert frozenset({"1", "2", "3"}) in tree_orbits.vertex_orbits
        assert len(tree_orbits.edge_orbits) == 1

    def test_double_star_orbits(self):
        tree_orbits = orbits(F2.pointed().tree)

        assert set(tree_orbits.vertex_orbits) == {frozenset({"a", "p"}), frozenset({"a1", "a2", "p1", "p2"})}
        assert frozenset({("a", "p")}) in tree_orbits.edge_orbits
        assert len(tree_orbits.edge_orbits) == 2

    @pytest.mark.parametrize("sample, expected", [(ARC_END, 2), (STAR3, 3), (F2, 4)])
    def test_homogeneity_degree(self, sample, expected):
        assert homogeneity_degree(sample.pointed().tree) == expected

    def test_path_tree_orbits_split_by_position(self):
        # a and b sit at different distances from the end points
        assert homogeneity_degree(F3.pointed().tree) > homogeneity_degree(F2.pointed().tree)


class TestEnumeration:
    """Test cases for tree and pointed-tree enumeration"""

    def test_series_reduced_counts(self):
        trees = list(enumerate_trees(9))
        counts = [sum(1 for tree in trees if len(tree.edges) == k) for k in range(1, 10)]

        assert counts == SERIES_REDUCED_COUNTS

    def test_counts_match_networkx_generator(self):
        for order in range(2, 9):
            expected = sum(
                1 for graph in nx.nonisomorphic_trees(order)
                if all(degree != 2 for _, degree in graph.degree())
            )
            assert sum(1 for tree in enumerate_trees(order - 1) if len(tree.edges) == order - 1) == expected

    def test_no_degree_two_vertices_and_no_duplicates(self):
        trees = list(enumerate_trees(7))

        assert all(tree.degree(v) != 2 for tree in trees for v in tree.vertices)
        codes = [free_canonical_code(tree) for tree in trees]
        assert len(set(codes)) == len(codes)

    def test_order_is_by_edge_count(self):
        sizes = [len(tree.edges) for tree in enumerate_trees(8)]
        assert sizes == sorted(sizes)

    def test_enumeration_is_deterministic(self):
        first = [tree.sorted_edges() for tree in enumerate_trees(6)]
        second = [tree.sorted_edges() for tree in enumerate_trees(6)]
        assert first == second

    def test_invalid_max_edges(self):
        with pytest.raises(ValueError):
            list(enumerate_trees(0))

    @pytest.mark.parametrize("max_edges, expected", [(1, 2), (3, 5)])
    def test_pointed_counts(self, max_edges, expected):
        assert len(list(enumerate_pointed(max_edges))) == expected

    def test_pointed_trees_are_pairwise_non_isomorphic(self):
        pointed = list(enumerate_pointed(6))
        codes = [canonical_code(t) for t in pointed]
        assert len(set(codes)) == len(codes)

    def test_pointed_count_matches_homogeneity_degrees(self):
        trees = list(enumerate_trees(6))
        assert len(list(enumerate_pointed(6))) == sum(homogeneity_degree(tree) for tree in trees)


class TestOrbitsAgainstAutomorphisms:
    """Orbit partitions compared with an explicit automorphism search"""

    @staticmethod
    def automorphism_orbits(tree):
        graph = tree.to_networkx()
        images = {v: set() for v in graph.nodes}
        for mapping in nx.vf2pp_all_isomorphisms(graph, graph):
            for v, w in mapping.items():
                images[v].add(w)
        return {frozenset(orbit) for orbit in images.values()}

    def test_vertex_orbits_match_for_small_trees(self):
        for tree in enumerate_trees(7):
            assert set(orbits(tree).vertex_orbits) == self.automorphism_orbits(tree)

    @staticmethod
    def automorphism_edge_orbits(tree):
        graph = tree.to_networkx()
        images = {edge: set() for edge in tree.edges}
        for mapping in nx.vf2pp_all_isomorphisms(graph, graph):
            for u, v in tree.edges:
                images[edge_key(u, v)].add(edge_key(mapping[u], mapping[v]))
        return {frozenset(orbit) for orbit in images.values()}

    def test_edge_orbits_match_for_small_trees(self):
        for tree in enumerate_trees(7):
            assert set(orbits(tree).edge_orbits) == self.automorphism_edge_orbits(tree)


class TestRootedIsomorphismAgainstBijections:
    """rooted_isomorphic compared with a search over basepoint-preserving bijections"""

    @staticmethod
    def bijection_exists(a, b):
        if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
            return False
        rest_a = sorted(a.vertices - {a.basepoint})
        rest_b = sorted(b.vertices - {b.basepoint})
        for image in permutations(rest_b):
            mapping = dict(zip(rest_a, image))
            mapping[a.basepoint] = b.basepoint
            if all(edge_key(mapping[u], mapping[v]) in b.edges for u, v in a.edges):
                return True
        return False

    def test_every_basepoint_of_every_small_tree(self):
        pointed = [
            PointedTree(tree, v)
            for tree in enumerate_trees(6)
            for v in sorted(tree.vertices)
        ]
        for a in pointed:
            for b in pointed:
                assert rooted_isomorphic(a, b) == self.bijection_exists(a, b)
