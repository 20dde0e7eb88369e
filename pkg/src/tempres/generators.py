"""Seeded random instances.

Every generator draws from its own ``random.Random(seed)`` (Mersenne Twister
MT19937 with Python's seeding), in the order documented per function, so the
same parameters and seed always give byte-identical serializations.
"""
from __future__ import annotations

import itertools
import random
from typing import Optional, Sequence

from .graph import TemporalGraph
from .paths import PathView
from .reductions import ThreeDMInstance
from .stars import SubdividedStarView


def random_temporal_path(n: int, label_max: int, seed: int) -> tuple[TemporalGraph, PathView]:
    """Path ``0 - 1 - ... - n-1`` with one uniform label in ``[1, label_max]`` per edge."""
    if n < 1 or label_max < 1:
        raise ValueError("n and label_max must be positive")
    rng = random.Random(seed)
    t = [rng.randint(1, label_max) for _ in range(n - 1)]
    view = PathView(tuple(range(n)), tuple(t))
    return TemporalGraph.finite(n, {(i, i + 1): [x] for i, x in enumerate(t)}), view


def random_subdivided_star(degree: int, max_branch_len: int, seed: int,
                           labels: Sequence[int] = (1, 2), period: Optional[int] = None
                           ) -> tuple[TemporalGraph, SubdividedStarView]:
    """Center 0 with ``degree`` branches numbered outward one after another.

    For each branch its length is drawn first (uniform in ``[1, max_branch_len]``),
    then one label per edge from the center outward: uniform over ``labels``
    for a finite graph, or a uniform residue in ``[1, period]`` when
    ``period`` is given.
    """
    if degree < 3 or max_branch_len < 1:
        raise ValueError("need degree >= 3 and max_branch_len >= 1")
    rng = random.Random(seed)
    domain = list(range(1, period + 1)) if period is not None else sorted(set(labels))
    if not domain:
        raise ValueError("empty label domain")
    lab = {}
    nxt = 1
    for _ in range(degree):
        length = rng.randint(1, max_branch_len)
        prev = 0
        for _ in range(length):
            lab[(prev, nxt)] = [rng.choice(domain)]
            prev, nxt = nxt, nxt + 1
    g = (TemporalGraph.periodic(nxt, period, lab) if period is not None
         else TemporalGraph.finite(nxt, lab))
    return g, SubdividedStarView.from_graph(g)


def random_periodic_tree(n: int, p: int, seed: int) -> TemporalGraph:
    """Random attachment tree: vertex ``i`` picks a uniform parent below it, then a residue."""
    if n < 2 or p < 1:
        raise ValueError("need n >= 2 and p >= 1")
    rng = random.Random(seed)
    lab = {}
    for i in range(1, n):
        parent = rng.randrange(i)
        lab[(parent, i)] = [rng.randint(1, p)]
    return TemporalGraph.periodic(n, p, lab)


def random_connected_graph(n: int, seed: int, extra_prob: float = 0.3
                           ) -> list[tuple[int, int]]:
    """Edge list of a connected static graph: a random attachment tree plus each
    remaining pair independently with probability ``extra_prob`` (pairs in
    lexicographic order)."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for e in itertools.combinations(range(n), 2):
        if e not in edges and rng.random() < extra_prob:
            edges.add(e)
    return sorted(edges)


def random_3dm(p_size: int, s: int, n: int, seed: int,
               target: Optional[int] = None) -> ThreeDMInstance:
    """``s`` distinct triples over ``X = 1..p``, ``Y = p+1..2p``, ``Z = 2p+1..3p``.

    Triples are sampled without replacement from the ``p**3`` candidates in
    lexicographic order; the target, unless given, is then uniform in ``[0, s-1]``.
    """
    if s < 2:
        raise ValueError("need s >= 2")
    if p_size < 1 or 3 * p_size > n:
        raise ValueError("three disjoint ground sets of size p_size do not fit in 1..n")
    if s > p_size ** 3:
        raise ValueError(f"only {p_size ** 3} distinct triples exist")
    rng = random.Random(seed)
    p = p_size
    pool = list(itertools.product(range(1, p + 1), range(p + 1, 2 * p + 1),
                                  range(2 * p + 1, 3 * p + 1)))
    triples = sorted(rng.sample(pool, s))
    if target is None:
        target = rng.randrange(s)
    return ThreeDMInstance(n, p_size, tuple(triples), target)
