import itertools
import random

import pytest

from tempres.exact import GuardExceeded
from tempres.generators import random_3dm, random_connected_graph
from tempres.graph import TemporalGraph, leaves
from tempres.reductions import (ThreeDMInstance, brute_force_3dm, matching_to_resolving_set,
                                reduce_3dm_to_substar, reduce_3dm_to_tree,
                                reduce_3dm_to_tree_intervals, reduce_adjacency_to_complete,
                                substar_budget, substar_layout, tree_budget, tree_layout)
from tempres.verify import check_resolving, is_resolving

from oracles import bfs_distances, journey_distances, max_matching, min_adjacency_dimension, min_resolving


class TestThreeDM:
    def test_validation(self):
        with pytest.raises(ValueError):
            ThreeDMInstance(6, 2, ((1, 3, 7),), 0)       # outside 1..n
        with pytest.raises(ValueError):
            ThreeDMInstance(6, 2, ((1, 3, 5), (3, 4, 6)), 0)  # 3 used as x and y
        with pytest.raises(ValueError):
            ThreeDMInstance(9, 1, ((1, 3, 5), (2, 4, 6)), 0)  # X has two elements
        with pytest.raises(ValueError):
            ThreeDMInstance(6, 2, ((1, 3, 5), (1, 3, 5)), 0)
        with pytest.raises(ValueError):
            ThreeDMInstance(6, 2, ((1, 3, 5),), 1)

    def test_brute_force(self):
        assert brute_force_3dm([(1, 3, 5), (2, 4, 6)]) == 2
        assert brute_force_3dm([(1, 3, 5), (1, 4, 6), (2, 4, 5)]) == 1
        assert brute_force_3dm([(1, 3, 5), (1, 4, 6), (2, 3, 6)]) == 1
        assert brute_force_3dm([(1, 4, 6), (2, 3, 5), (1, 3, 5)]) == 2

    def test_brute_force_guard(self):
        with pytest.raises(GuardExceeded):
            brute_force_3dm([(1, 2 + i, 40 + i) for i in range(13)])

    def test_brute_force_matches_oracle(self):
        for seed in range(60):
            inst = random_3dm(3, 2 + seed % 8, 9, seed)
            assert brute_force_3dm(inst) == max_matching(inst.triples)

    def test_is_matching_indices(self):
        inst = ThreeDMInstance(6, 2, ((1, 3, 5), (2, 4, 6), (1, 4, 5)), 1)
        assert inst.is_matching([0, 1]) and not inst.is_matching([0, 2])
        assert not inst.is_matching([0, 0]) and not inst.is_matching([5])


class TestAdjacency:
    def test_p3(self):
        g = reduce_adjacency_to_complete(3, [(0, 1), (1, 2)])
        assert {e: g.label(*e).labels for e in g.edges} == {(0, 1): (1,), (0, 2): (2,), (1, 2): (1,)}

    def test_c4(self):
        g = reduce_adjacency_to_complete(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert g.label(0, 2).labels == (2,) and g.label(1, 3).labels == (2,)

    def test_distances_truncate(self):
        for seed in range(30):
            n = 2 + seed % 6
            edges = random_connected_graph(n, seed)
            D = journey_distances(reduce_adjacency_to_complete(n, edges))
            assert D == [[min(x, 2) for x in row] for row in bfs_distances(n, edges)]

    def test_rejects(self):
        with pytest.raises(ValueError):
            reduce_adjacency_to_complete(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError):
            reduce_adjacency_to_complete(2, [(0, 0)])


class TestSubstar:
    def test_single_triple_labels(self):
        inst = ThreeDMInstance(5, 1, ((1, 3, 5),), 0)
        g, k = reduce_3dm_to_substar(inst)
        names = substar_layout(inst)
        u, a, b, c = names[("u",)], names[("a", 0)], names[("b", 0)], names[("c", 0)]
        assert g.label(u, a).labels == (2, 5)
        assert g.label(a, b).labels == (3, 7)
        assert g.label(b, c).labels == (4, 9)
        assert [g.label(*e).labels for e in ((0, 1), (1, 2), (2, 3))] == [(2,), (1,), (3,)]
        assert k == 2 and substar_budget(inst, "statement") == 3

    def test_structure(self):
        for seed in range(20):
            inst = random_3dm(2, 2 + seed % 3, 6, seed)
            g, _ = reduce_3dm_to_substar(inst)
            assert g.n == 4 + 3 * inst.s
            assert g.degree(0) == inst.s + 1
            assert all(len(g.label(*e)) <= 2 for e in g.edges)
            assert len(leaves(g)) == inst.s + 1

    def test_forward_sets(self):
        for seed in range(30):
            inst = random_3dm(2, 2 + seed % 3, 6, seed)
            for k in range(inst.s + 1):
                for M in itertools.combinations(range(inst.s), k):
                    if inst.is_matching(M):
                        R = matching_to_resolving_set(inst, M, "substar")
                        g, _ = reduce_3dm_to_substar(inst)
                        assert is_resolving(g, R)
                        assert len(R) == inst.s + 1 - len(M)

    def test_bad_budget(self):
        with pytest.raises(ValueError):
            substar_budget(ThreeDMInstance(5, 1, ((1, 3, 5),), 0), "other")


class TestTree:
    inst = ThreeDMInstance(3, 1, ((1, 2, 3),), 0)

    def test_size_and_labels(self):
        g, k = reduce_3dm_to_tree(self.inst, normalized=False)
        assert g.n == 25 and k == 8 == tree_budget(self.inst)
        names = tree_layout(self.inst)
        key = ("v", 0, 2)
        assert g.label(names[("t",) + key], names[key]).labels == (10,)
        assert min(min(l.labels) for l in g.labels.values()) == 2
        assert max(max(l.labels) for l in g.labels.values()) == 10

    def test_normalized_shift(self):
        raw, _ = reduce_3dm_to_tree(self.inst, normalized=False)
        g, _ = reduce_3dm_to_tree(self.inst)
        assert all(g.label(*e).labels == tuple(x - 1 for x in raw.label(*e).labels) for e in g.edges)

    def test_intervals(self):
        g, _ = reduce_3dm_to_tree_intervals(self.inst, normalized=False)
        for e in g.edges:
            a, b = g.label(*e).labels
            assert b == a + 1

    def test_degree(self):
        g, _ = reduce_3dm_to_tree(self.inst)
        assert all(g.degree(v) <= 4 for v in range(1, g.n))
        five = random_3dm(2, 5, 6, 1)
        g, _ = reduce_3dm_to_tree(five)
        assert g.is_connected() and len(g.edges) == g.n - 1
        assert [v for v in range(g.n) if g.degree(v) >= 5] == [0]

    def test_forward_set(self):
        g, k = reduce_3dm_to_tree(self.inst)
        R = matching_to_resolving_set(self.inst, [], "tree")
        cert = check_resolving(g, R)
        assert cert.is_resolving and len(R) == k

    def test_full_matching_rejected(self):
        with pytest.raises(ValueError):
            matching_to_resolving_set(self.inst, [0], "tree")

    def test_rejects_non_matching(self):
        inst = ThreeDMInstance(6, 2, ((1, 3, 5), (1, 4, 6)), 0)
        with pytest.raises(ValueError):
            matching_to_resolving_set(inst, [0, 1], "substar")
