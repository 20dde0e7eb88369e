"""Minimum temporal resolving sets of finite temporal paths with one label per edge.

Positions ``0..n-1`` run left to right; ``t[i]`` is the label of the edge
between positions ``i`` and ``i + 1``.  On such a path the temporal distance
from ``s`` to a vertex on its right is the label of the last edge entering it,
and a journey continues only while labels keep increasing.  So every reach set
is an interval given by two precomputed run ends.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import TemporalGraph, edge_key, path_order


@dataclass(frozen=True)
class PathView:
    order: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "t", tuple(int(x) for x in self.t))
        if len(self.order) < 1 or len(self.t) != len(self.order) - 1:
            raise ValueError("a path on n vertices needs n - 1 edge labels")
        if any(x < 1 for x in self.t):
            raise ValueError("labels must be positive")

    @property
    def n(self) -> int:
        return len(self.order)

    @classmethod
    def from_graph(cls, g: TemporalGraph, order: Sequence[int] = None) -> "PathView":
        """View of ``g`` along ``order``, which may be any path inside ``g``."""
        if g.is_periodic:
            raise ValueError("finite labeling required")
        if order is None:
            order = path_order(g)
            if order is None:
                raise ValueError("underlying graph is not a path")
        t = []
        for a, b in zip(order, order[1:]):
            lab = g.labels.get(edge_key(a, b))
            if lab is None:
                raise ValueError(f"({a}, {b}) is not an edge")
            if len(lab) != 1:
                raise ValueError(f"edge ({a}, {b}) has {len(lab)} labels; 1-labeling required")
            t.append(lab.labels[0])
        if len(set(order)) != len(order):
            raise ValueError("order repeats a vertex")
        return cls(tuple(order), tuple(t))

    def to_graph(self) -> TemporalGraph:
        n = max(self.order) + 1
        return TemporalGraph.finite(
            n, {(a, b): [x] for a, b, x in zip(self.order, self.order[1:], self.t)})

    def reversed(self) -> "PathView":
        return PathView(self.order[::-1], self.t[::-1])


def reach_bounds(t: Sequence[int]) -> tuple[list[int], list[int]]:
    """``(lend, rend)``: leftmost and rightmost position reached from each position."""
    n = len(t) + 1
    rend = list(range(n))
    if n >= 2:
        rend[n - 2] = n - 1
    for i in range(n - 3, -1, -1):
        rend[i] = rend[i + 1] if t[i] < t[i + 1] else i + 1
    lend = [0] * n
    for i in range(2, n):
        lend[i] = lend[i - 1] if t[i - 2] > t[i - 1] else i - 1
    return lend, rend


def solve_path_positions(t: Sequence[int]) -> list[int]:
    """Greedy left-to-right resolving set, as positions in increasing order."""
    n = len(t) + 1
    if n == 1:
        return [0]
    lend, rend = reach_bounds(t)
    R: list[int] = []
    covered = -1    # positions 0..covered are reached by earlier landmarks
    v = 0           # current target
    while True:
        s = v
        while s + 1 < n and lend[s + 1] <= v:
            s += 1
        R.append(s)
        lo, hi = max(lend[s], covered + 1), rend[s]
        left = {t[x] for x in range(lo, s)}
        conflict = None
        for x in range(max(s + 1, lo), hi + 1):
            if t[x - 1] in left:
                conflict = x
                break
        covered = max(covered, hi)
        if conflict is not None:
            v = conflict
            continue
        if hi == n - 1:
            return R
        v = hi + 1


def solve_path(p: PathView, reverse: bool = False) -> list[int]:
    """Minimum-size temporal resolving set of a finite 1-labeled path.

    The greedy scan runs from ``p.order[0]``; ``reverse=True`` scans from the
    other end.  Both give optimal sets of the same size, usually different.
    """
    if reverse:
        p = p.reversed()
    pos = solve_path_positions(p.t)
    return sorted(p.order[i] for i in pos)


def solve_path_graph(g: TemporalGraph, reverse: bool = False) -> list[int]:
    return solve_path(PathView.from_graph(g), reverse=reverse)
