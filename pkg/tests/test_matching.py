"""Matching computation and enumeration, checked against exhaustive backtracking."""

import pytest

from matchcover import (
    BindingError,
    Edge,
    Graph,
    GuardExceededError,
    Matching,
    brute_force_matching_number,
    covered_and_missed,
    enumerate_maximum_matchings,
    has_perfect_matching,
    is_perfect,
    matching_number,
    matchings_containing,
    maximum_matching,
)

from helpers import C4, K2, K3, K4, P3, P4, TWO_K2, path_graph


def assert_valid_matching(g, f):
    seen = set()
    for e in f.edges:
        assert e in g.edge_set
        assert not seen & set(e)
        seen.update(e)


class TestMaximumMatching:
    @pytest.mark.parametrize(
        "g,size",
        [(C4, 2), (K3, 1), (Graph(3), 0), (P4, 2), (K4, 2), (K2, 1)],
    )
    def test_size_matches_oracle(self, g, size):
        assert brute_force_matching_number(g) == size
        f = maximum_matching(g)
        assert_valid_matching(g, f)
        assert len(f) == size
        assert matching_number(g) == size

    def test_deterministic(self):
        assert maximum_matching(K4) == maximum_matching(K4)

    def test_bound_to_graph(self):
        assert maximum_matching(C4).fingerprint == C4.fingerprint

    def test_blossom_needs_contraction(self):
        # Two triangles joined by a bridge: greedy + bipartite-style search
        # alone underestimates; the blossom step is required for nu = 3.
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
        assert matching_number(g) == 3
        assert brute_force_matching_number(g) == 3

    def test_petersen_graph(self):
        g = Graph(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
             (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
             (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        assert matching_number(g) == 5
        assert brute_force_matching_number(g) == 5


class TestBruteForceGuard:
    def test_guard_exceeded(self):
        g = path_graph(34)  # 33 edges
        with pytest.raises(GuardExceededError):
            brute_force_matching_number(g)
        with pytest.raises(GuardExceededError):
            enumerate_maximum_matchings(g)


class TestEnumeration:
    def test_cycle_has_two(self):
        ms = enumerate_maximum_matchings(C4)
        assert ms.nu == 2
        assert [f.edges for f in ms] == [
            (Edge(0, 1), Edge(2, 3)),
            (Edge(0, 3), Edge(1, 2)),
        ]

    def test_triangle_has_three_singletons(self):
        ms = enumerate_maximum_matchings(K3)
        assert ms.nu == 1
        assert [f.edges for f in ms] == [
            (Edge(0, 1),), (Edge(0, 2),), (Edge(1, 2),)
        ]

    def test_edgeless_has_empty_matching(self):
        ms = enumerate_maximum_matchings(Graph(2))
        assert ms.nu == 0
        assert [f.edges for f in ms] == [()]

    def test_members_are_valid_and_sorted(self):
        ms = enumerate_maximum_matchings(K4)
        assert len(ms) == 3
        for f in ms:
            assert_valid_matching(K4, f)
            assert len(f) == ms.nu
        assert list(ms.matchings) == sorted(ms.matchings)


class TestRestriction:
    def test_cycle_edge(self):
        ms = enumerate_maximum_matchings(C4)
        assert [f.edges for f in matchings_containing(ms, (0, 1))] == [
            (Edge(0, 1), Edge(2, 3))
        ]
        assert [f.edges for f in matchings_containing(ms, (1, 2))] == [
            (Edge(0, 3), Edge(1, 2))
        ]

    def test_path_middle_edge_is_in_none(self):
        ms = enumerate_maximum_matchings(P4)
        assert matchings_containing(ms, (1, 2)) == ()

    def test_non_edge_rejected(self):
        ms = enumerate_maximum_matchings(C4)
        with pytest.raises(ValueError):
            matchings_containing(ms, (0, 2))


class TestMatchingValues:
    def test_factory_validates_membership(self):
        with pytest.raises(ValueError):
            Matching.of(P4, [(0, 3)])

    def test_factory_validates_disjointness(self):
        with pytest.raises(ValueError):
            Matching.of(K3, [(0, 1), (0, 2)])

    def test_covered_and_missed_partition(self):
        a, b = covered_and_missed(K3, Matching.of(K3, [(0, 1)]))
        assert a == frozenset({0, 1})
        assert b == frozenset({2})

    def test_perfect_matching_covers_all(self):
        f = Matching.of(C4, [(0, 1), (2, 3)])
        a, b = covered_and_missed(C4, f)
        assert a == frozenset(range(4))
        assert b == frozenset()

    def test_empty_matching_misses_all(self):
        a, b = covered_and_missed(K4, Matching.of(K4, []))
        assert a == frozenset()
        assert b == frozenset(range(4))

    def test_cross_graph_use_rejected(self):
        f = Matching.of(C4, [(0, 1)])
        with pytest.raises(BindingError):
            covered_and_missed(K4, f)
        with pytest.raises(BindingError):
            is_perfect(K4, f)

    def test_is_perfect(self):
        assert is_perfect(C4, Matching.of(C4, [(0, 1), (2, 3)]))
        assert not is_perfect(K3, Matching.of(K3, [(0, 1)]))
        assert is_perfect(Graph(0), Matching.of(Graph(0), []))

    def test_has_perfect_matching(self):
        assert has_perfect_matching(C4)
        assert not has_perfect_matching(K3)
        assert has_perfect_matching(TWO_K2)
        assert has_perfect_matching(Graph(0))
        assert not has_perfect_matching(P3)
