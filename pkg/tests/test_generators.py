import os

import pytest

from tempres.generators import (random_3dm, random_connected_graph, random_periodic_tree,
                                random_subdivided_star, random_temporal_path)
from tempres.graph import is_tree, subdivided_star_branches
from tempres.io import parse_instance, serialize_instance

from golden_cases import CASES, GOLDEN_DIR, golden_text


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_bytes(name):
    with open(os.path.join(GOLDEN_DIR, name), "rb") as f:
        recorded = f.read()
    assert golden_text(name).encode("utf-8") == recorded


def test_single_vertex_path():
    g, view = random_temporal_path(1, 3, 0)
    assert g.n == 1 and not g.edges and view.t == ()


@pytest.mark.parametrize("make", [
    lambda s: random_temporal_path(12, 5, s)[0],
    lambda s: random_subdivided_star(4, 3, s)[0],
    lambda s: random_subdivided_star(5, 2, s, period=4)[0],
    lambda s: random_periodic_tree(10, 3, s),
    lambda s: random_3dm(2, 3, 6, s),
])
def test_determinism(make):
    for seed in range(10):
        assert serialize_instance(make(seed)) == serialize_instance(make(seed))
    assert len({serialize_instance(make(s)) for s in range(10)}) > 1


def test_shapes_and_bounds():
    for seed in range(40):
        g, view = random_temporal_path(8, 3, seed)
        assert all(1 <= x <= 3 for x in view.t)
        g, view = random_subdivided_star(3 + seed % 3, 4, seed)
        assert subdivided_star_branches(g) is not None and g.label_values() <= {1, 2}
        assert all(1 <= len(b) <= 4 for b in view.branches)
        t = random_periodic_tree(2 + seed % 10, 3, seed)
        assert is_tree(t) and t.period == 3
        edges = random_connected_graph(1 + seed % 8, seed)
        assert all(u < v for u, v in edges)
        inst = random_3dm(2, 2 + seed % 7, 6, seed)
        assert 0 <= inst.target < inst.s


def test_rejects_infeasible():
    with pytest.raises(ValueError):
        random_3dm(2, 9, 6, 0)
    with pytest.raises(ValueError):
        random_3dm(3, 2, 8, 0)
    with pytest.raises(ValueError):
        random_3dm(2, 1, 6, 0)
    with pytest.raises(ValueError):
        random_subdivided_star(2, 3, 0)
    with pytest.raises(ValueError):
        random_periodic_tree(1, 2, 0)


def test_round_trip_generated():
    for seed in range(30):
        for obj in (random_temporal_path(7, 4, seed)[0], random_periodic_tree(8, 2, seed),
                    random_subdivided_star(3, 3, seed, period=2)[0], random_3dm(2, 4, 7, seed)):
            text = serialize_instance(obj)
            assert serialize_instance(parse_instance(text)) == text
