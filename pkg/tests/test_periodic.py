import itertools
import random

import pytest

from tempres.exact import GuardExceeded
from tempres.generators import random_subdivided_star
from tempres.graph import TemporalGraph
from tempres.periodic import (build_binary_tree_alternating, build_binary_tree_uniform,
                              build_complete_tight, build_complete_worst, build_star_lower_tight,
                              build_star_upper_tight, locally_maximal_edge, periodic_bounds,
                              periodic_report, solve_cycle_periodic, solve_path_periodic,
                              solve_substar_periodic)
from tempres.verify import distance_vectors, is_resolving

from oracles import journey_distances, min_resolving


def cycle(residues, p):
    n = len(residues)
    return TemporalGraph.periodic(n, p, {(i, (i + 1) % n) if i < n - 1 else (0, n - 1): [r]
                                         for i, r in enumerate(residues)})


def oracle_size(g, pool=None):
    return min_resolving(journey_distances(g), pool)[0]


class TestPath:
    def test_single_vertex(self):
        assert solve_path_periodic(TemporalGraph.periodic(1, 3, {})) == [0]

    def test_small_paths_match_oracle(self):
        rng = random.Random(4)
        for _ in range(80):
            n, p = rng.randint(1, 10), rng.randint(1, 4)
            g = TemporalGraph.periodic(n, p, {(i, i + 1): [rng.randint(1, p)] for i in range(n - 1)})
            R = solve_path_periodic(g)
            assert len(R) == 1 and is_resolving(g, R) and oracle_size(g) == 1

    def test_rejects_finite(self):
        with pytest.raises(ValueError):
            solve_path_periodic(TemporalGraph.finite(2, {(0, 1): [1]}))


class TestCycle:
    def test_c4_distinct(self):
        g = cycle([1, 2, 3, 4], 4)
        R = solve_cycle_periodic(g)
        assert len(R) == oracle_size(g) == 1

    def test_c3_equal(self):
        g = cycle([2, 2, 2], 3)
        assert len(solve_cycle_periodic(g)) == oracle_size(g) == 2

    def test_locally_maximal_pair_resolves(self):
        rng = random.Random(9)
        for _ in range(300):
            n, p = rng.randint(3, 12), rng.randint(1, 5)
            g = cycle([rng.randint(1, p) for _ in range(n)], p)
            assert is_resolving(g, locally_maximal_edge(g))

    def test_rejects_two_labels(self):
        g = TemporalGraph.periodic(3, 3, {(0, 1): [1, 2], (1, 2): [1], (0, 2): [1]})
        with pytest.raises(ValueError):
            solve_cycle_periodic(g)


class TestComplete:
    def test_b1_p2_distances(self):
        g, B = build_complete_tight(1, 2)
        assert g.n == 3 and B == [0]
        vec = distance_vectors(g, B)
        assert (vec[1], vec[2]) == ((1,), (2,))

    def test_b2_p2(self):
        g, B = build_complete_tight(2, 2)
        assert g.n == 6 and is_resolving(g, B)
        assert oracle_size(g) == 2

    def test_b1_p1(self):
        g, B = build_complete_tight(1, 1)
        assert g.n == 2 and is_resolving(g, B)

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            build_complete_tight(3, 4)

    @pytest.mark.parametrize("n, size", [(2, 1), (3, 2), (4, 3)])
    def test_worst(self, n, size):
        assert oracle_size(build_complete_worst(n, 3)) == size


class TestSubstar:
    def test_equal_residues(self):
        g = TemporalGraph.periodic(7, 1, {(0, 1): [1], (1, 2): [1], (0, 3): [1], (3, 4): [1],
                                          (0, 5): [1], (5, 6): [1]})
        assert len(solve_substar_periodic(g)) == 2 == oracle_size(g)

    def test_tightness_constructions(self):
        for ell, p in itertools.product(range(2, 6), range(1, 4)):
            lo = build_star_lower_tight(ell, p)
            assert len(solve_substar_periodic(lo)) == max(1, ell - p)
            hi = build_star_upper_tight(ell, p, 2)
            assert len(solve_substar_periodic(hi)) == ell - 1

    def test_two_leaves_is_a_path(self):
        g = TemporalGraph.periodic(3, 2, {(0, 1): [1], (1, 2): [1]})
        assert len(solve_substar_periodic(g)) == 1

    def test_matches_oracle(self):
        for seed in range(120):
            rng = random.Random(seed)
            g, _ = random_subdivided_star(rng.randint(3, 5), 3, seed, period=rng.randint(1, 3))
            R = solve_substar_periodic(g)
            assert is_resolving(g, R) and len(R) == oracle_size(g)


class TestBinaryTree:
    def test_alternating_three_levels(self):
        g, R = build_binary_tree_alternating(3)
        assert g.n == 7 and len(R) == 1 and is_resolving(g, R)

    def test_alternating_four_levels(self):
        g, R = build_binary_tree_alternating(4)
        assert len(R) == 2 and is_resolving(g, R)
        leaves = [v for v in range(g.n) if g.degree(v) == 1]
        assert min_resolving(journey_distances(g), leaves) [0] == 2

    def test_designated_leaves(self):
        assert build_binary_tree_alternating(4)[1] == [7, 11]

    @pytest.mark.parametrize("levels, size", [(3, 2), (4, 4)])
    def test_uniform(self, levels, size):
        g = build_binary_tree_uniform(levels)
        leaves = [v for v in range(g.n) if g.degree(v) == 1]
        assert min_resolving(journey_distances(g), leaves)[0] == size

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            build_binary_tree_uniform(0)


class TestBoundsAndReport:
    def test_sources(self):
        assert periodic_bounds(cycle([1, 2, 3], 3))[2] == "cycle"
        assert periodic_bounds(build_complete_worst(6, 2)) == (2, 5, "complete")
        assert periodic_bounds(build_complete_worst(4, 2)) is None
        assert periodic_bounds(build_star_lower_tight(4, 2))[:2] == (2, 3)
        assert periodic_bounds(build_binary_tree_uniform(4)) == (2, 4, "binary-tree")

    def test_finite_has_no_bounds(self):
        assert periodic_bounds(TemporalGraph.finite(2, {(0, 1): [1]})) is None

    def test_report(self):
        g = cycle([1, 2, 3, 4], 4)
        rep = periodic_report(g, solve_cycle_periodic(g))
        assert rep.computed_size == 1 and rep.within_bounds
