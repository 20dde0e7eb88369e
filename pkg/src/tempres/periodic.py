"""Periodic 1-labelings: exact solvers, extremal constructions and size bounds.

Under a p-periodic labeling every edge label is a residue in ``[1, p]`` that
recurs every ``p`` time-steps.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import GuardExceeded
from .graph import (TemporalGraph, binary_tree_levels, cycle_order, edge_key, is_complete,
                    is_tree, leaves, path_order, subdivided_star_branches)
from .verify import DistanceTable, is_resolving

COMPLETE_GUARD = 40


@dataclass(frozen=True)
class PeriodicInstanceReport:
    computed_size: int
    lower_bound: int
    upper_bound: int
    bound_source: str

    @property
    def within_bounds(self) -> bool:
        return self.lower_bound <= self.computed_size <= self.upper_bound


def _require_periodic_one_labeling(g: TemporalGraph):
    if not g.is_periodic:
        raise ValueError("periodic labeling required")
    if not g.is_k_labeling(1):
        raise ValueError("periodic 1-labeling required (k >= 2 is not supported)")


# --- paths and cycles ----------------------------------------------------------

def solve_path_periodic(g: TemporalGraph) -> list[int]:
    """One end of the path: each vertex is reached strictly before the next one."""
    if not g.is_periodic:
        raise ValueError("periodic labeling required")
    order = path_order(g)
    if order is None:
        raise ValueError("underlying graph is not a path")
    return [order[0]]


def locally_maximal_edge(g: TemporalGraph) -> tuple[int, int]:
    """First edge (in sorted order) whose residue is at least both neighbours'."""
    order = cycle_order(g)
    if order is None:
        raise ValueError("underlying graph is not a cycle")
    n = len(order)
    ring = [edge_key(order[i], order[(i + 1) % n]) for i in range(n)]
    pos = {e: i for i, e in enumerate(ring)}
    res = [g.labels[e].labels[0] for e in ring]
    for e in g.edges:
        i = pos[e]
        if res[i] >= res[i - 1] and res[i] >= res[(i + 1) % n]:
            return e
    raise AssertionError("a maximum residue edge always qualifies")


def solve_cycle_periodic(g: TemporalGraph) -> list[int]:
    """Minimum resolving set of a periodic cycle: a singleton if one works, else a pair."""
    _require_periodic_one_labeling(g)
    if cycle_order(g) is None:
        raise ValueError("underlying graph is not a cycle")
    table = DistanceTable(g)
    for v in range(g.n):
        if table.resolves((v,)):
            return [v]
    return list(locally_maximal_edge(g))


# --- complete graphs -------------------------------------------------------------

def build_complete_tight(b: int, p: int, guard: int = COMPLETE_GUARD
                         ) -> tuple[TemporalGraph, list[int]]:
    """Complete graph on ``b + p**b`` vertices resolved by its first ``b`` vertices.

    Every outside vertex gets its own tuple over ``1..p``; the edge from the
    i-th landmark to it carries the i-th coordinate, all other edges carry ``p``.
    """
    if b < 1 or p < 1:
        raise ValueError("b and p must be positive")
    n = b + p ** b
    if n > guard:
        raise GuardExceeded(f"n={n} exceeds the construction guard {guard}")
    labels = {}
    for u, v in itertools.combinations(range(n), 2):
        labels[(u, v)] = [p]
    for v, code in zip(range(b, n), itertools.product(range(1, p + 1), repeat=b)):
        for i, x in enumerate(code):
            labels[(i, v)] = [x]
    return TemporalGraph.periodic(n, p, labels), list(range(b))


def build_complete_worst(n: int, p: int) -> TemporalGraph:
    """Complete graph with residue 1 on every edge: all vertices are twins."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    return TemporalGraph.periodic(n, p, {e: [1] for e in itertools.combinations(range(n), 2)})


def complete_landmark_count(n: int, p: int) -> Optional[int]:
    """``b`` with ``n == b + p**b``, if any."""
    b = 1
    while b + p ** b <= n:
        if b + p ** b == n:
            return b
        if p == 1:
            return n - 1 if n >= 2 else None
        b += 1
    return None


# --- subdivided stars ------------------------------------------------------------

def solve_substar_periodic(g: TemporalGraph) -> list[int]:
    """Minimum resolving set of a periodic subdivided star (or path).

    Singletons are tried first.  Otherwise some optimum uses leaves only, and at
    least ``leaves - p`` of them are needed because branches whose center edges
    share a residue must all but one be marked, so leaf subsets are tried from
    that size upward.
    """
    _require_periodic_one_labeling(g)
    if path_order(g) is not None:
        return solve_path_periodic(g)
    if subdivided_star_branches(g) is None:
        raise ValueError("underlying graph is not a subdivided star")
    table = DistanceTable(g)
    for v in range(g.n):
        if table.resolves((v,)):
            return [v]
    tips = leaves(g)
    for size in range(max(2, len(tips) - g.period), len(tips) + 1):
        for R in itertools.combinations(tips, size):
            if table.resolves(R):
                return list(R)
    raise AssertionError("all leaves always resolve a subdivided star")


def build_star_lower_tight(leaf_count: int, p: int) -> TemporalGraph:
    """Star whose first ``p`` center edges have distinct residues, the rest residue 1."""
    if leaf_count < 2 or p < 1:
        raise ValueError("need at least two leaves and p >= 1")
    return TemporalGraph.periodic(
        leaf_count + 1, p,
        {(0, i): [i if i <= p else 1] for i in range(1, leaf_count + 1)})


def build_star_upper_tight(leaf_count: int, p: int, branch_length: int = 1) -> TemporalGraph:
    """Subdivided star with identical residues everywhere: all leaves are twins."""
    if leaf_count < 2 or branch_length < 1:
        raise ValueError("need at least two leaves and branch length >= 1")
    labels = {}
    nxt = 1
    for _ in range(leaf_count):
        prev = 0
        for _ in range(branch_length):
            labels[(prev, nxt)] = [1]
            prev, nxt = nxt, nxt + 1
    return TemporalGraph.periodic(nxt, p, labels)


# --- complete binary trees -------------------------------------------------------
# Vertices use heap numbering: root 0, children of i are 2i+1 and 2i+2.

def _binary_tree(levels: int, left: int, right: int) -> TemporalGraph:
    n = 2 ** levels - 1
    labels = {}
    for i in range((n - 1) // 2):
        labels[(i, 2 * i + 1)] = [left]
        labels[(i, 2 * i + 2)] = [right]
    return TemporalGraph.periodic(n, 2, labels)


def build_binary_tree_alternating(levels: int) -> tuple[TemporalGraph, list[int]]:
    """Complete binary tree whose two child edges carry residues 1 and 2.

    The landmark set takes, below each vertex three levels above the leaves,
    the leaf reached along two residue-1 edges.
    """
    if levels < 3:
        raise ValueError("at least three levels are needed")
    g = _binary_tree(levels, 1, 2)
    first, last = 2 ** (levels - 3) - 1, 2 ** (levels - 2) - 2
    return g, [4 * i + 3 for i in range(first, last + 1)]


def build_binary_tree_uniform(levels: int) -> TemporalGraph:
    """Complete binary tree with residue 1 on every edge."""
    if levels < 1:
        raise ValueError("at least one level is needed")
    return _binary_tree(levels, 1, 1)


# --- bounds ----------------------------------------------------------------------

def periodic_bounds(g: TemporalGraph) -> Optional[tuple[int, int, str]]:
    """``(lower, upper, source)`` for the shapes with known bounds, else None."""
    if not g.is_periodic or not g.is_k_labeling(1) or not g.is_connected():
        return None
    p = g.period
    if path_order(g) is not None:
        return 1, 1, "path"
    if cycle_order(g) is not None:
        return 1, 2, "cycle"
    if g.n >= 2 and is_complete(g):
        b = complete_landmark_count(g.n, p)
        if b is not None:
            return b, g.n - 1, "complete"
    if subdivided_star_branches(g) is not None:
        ell = len(leaves(g))
        return max(1, ell - p), ell - 1, "subdivided-star"
    if p == 2 and is_tree(g):
        levels = binary_tree_levels(g)
        if levels is not None:
            depth = max(levels.values()) + 1
            if depth >= 3:
                return 2 ** (depth - 3), 2 ** (depth - 2), "binary-tree"
    return None


def periodic_report(g: TemporalGraph, R: Sequence[int]) -> Optional[PeriodicInstanceReport]:
    found = periodic_bounds(g)
    if found is None:
        return None
    if not is_resolving(g, R):
        raise ValueError("the given set does not resolve the graph")
    lo, hi, source = found
    return PeriodicInstanceReport(len(set(R)), lo, hi, source)
