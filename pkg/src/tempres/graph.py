"""Temporal graphs with finite or periodic edge labelings.

Vertices are the integers ``0..n-1``.  Every edge carries a :class:`TimeLabelSet`
and all edges of one graph share the same mode (finite, or periodic with one
period ``p``).  Temporal distances are strict-journey earliest arrival times:
``0`` at the source, ``INF`` for unreachable vertices.
"""
from __future__ import annotations

import bisect
import heapq
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

INF = math.inf

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TimeLabelSet:
    """Labels of one edge.

    In finite mode ``labels`` are the time-steps themselves.  In periodic mode
    they are residues in ``[1, period]`` and the edge exists at every
    ``r + j * period`` for ``j >= 0``.
    """

    labels: tuple[int, ...]
    period: Optional[int] = None

    def __post_init__(self):
        labels = tuple(sorted(set(int(x) for x in self.labels)))
        if not labels:
            raise ValueError("label set must be non-empty")
        if labels[0] < 1:
            raise ValueError(f"labels must be positive, got {labels}")
        if self.period is not None:
            if self.period < 1:
                raise ValueError("period must be a positive integer")
            if labels[-1] > self.period:
                raise ValueError(f"residues {labels} exceed period {self.period}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def finite(cls, labels: Iterable[int]) -> "TimeLabelSet":
        return cls(tuple(labels))

    @classmethod
    def periodic(cls, residues: Iterable[int], period: int) -> "TimeLabelSet":
        return cls(tuple(residues), period)

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    def is_k_labeling(self, k: int) -> bool:
        return len(self.labels) <= k

    def __len__(self):
        return len(self.labels)

    def next_after(self, after: float) -> Optional[int]:
        return next_usable_label(self, after)


def next_usable_label(s: TimeLabelSet, after: float) -> Optional[int]:
    """Smallest time-step of ``s`` strictly greater than ``after``.

    Returns ``None`` when a finite set has no such label.  Periodic sets always
    answer, in ``O(len(residues))``.
    """
    if s.period is None:
        i = bisect.bisect_right(s.labels, after)
        return s.labels[i] if i < len(s.labels) else None
    p = s.period
    after = int(after)
    best = None
    for r in s.labels:
        if r > after:
            t = r
        else:
            t = r + ((after - r) // p + 1) * p
        if best is None or t < best:
            best = t
    return best


@dataclass(frozen=True)
class TemporalGraph:
    """An immutable temporal graph.

    ``labels`` maps each edge ``(u, v)`` with ``u < v`` to its label set.
    ``period`` is ``None`` for finite graphs.
    """

    n: int
    labels: Mapping[Edge, TimeLabelSet]
    period: Optional[int] = None
    adjacency: tuple[tuple[tuple[int, TimeLabelSet], ...], ...] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a temporal graph needs at least one vertex")
        clean: dict[Edge, TimeLabelSet] = {}
        for (u, v), lab in self.labels.items():
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            key = edge_key(u, v)
            if key in clean:
                raise ValueError(f"duplicate edge {key}")
            if not isinstance(lab, TimeLabelSet):
                lab = TimeLabelSet(tuple(lab), self.period)
            if lab.period != self.period:
                raise ValueError(
                    f"edge {key} has period {lab.period}, graph has {self.period}")
            clean[key] = lab
        ordered = dict(sorted(clean.items()))
        object.__setattr__(self, "labels", MappingProxyType(ordered))
        adj: list[list[tuple[int, TimeLabelSet]]] = [[] for _ in range(self.n)]
        for (u, v), lab in ordered.items():
            adj[u].append((v, lab))
            adj[v].append((u, lab))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @classmethod
    def finite(cls, n: int, labels: Mapping[Edge, Iterable[int]]) -> "TemporalGraph":
        return cls(n, {e: TimeLabelSet.finite(ls) for e, ls in labels.items()})

    @classmethod
    def periodic(cls, n: int, period: int,
                 labels: Mapping[Edge, Iterable[int]]) -> "TemporalGraph":
        return cls(n, {e: TimeLabelSet.periodic(ls, period) for e, ls in labels.items()},
                   period)

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    @property
    def edges(self) -> list[Edge]:
        return list(self.labels)

    @property
    def t_max(self) -> Optional[int]:
        """Largest label of a finite graph (``None`` if periodic or edgeless)."""
        if self.period is not None or not self.labels:
            return None
        return max(lab.labels[-1] for lab in self.labels.values())

    def label(self, u: int, v: int) -> TimeLabelSet:
        return self.labels[edge_key(u, v)]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_k_labeling(self, k: int) -> bool:
        return all(len(lab) <= k for lab in self.labels.values())

    def label_values(self) -> set[int]:
        return {x for lab in self.labels.values() for x in lab.labels}

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w, _ in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def normalize(g: TemporalGraph) -> TemporalGraph:
    """Shift all labels of a finite graph so the smallest one becomes 1."""
    if g.is_periodic:
        raise ValueError("periodic residues are already canonical; normalize is finite-only")
    if not g.labels:
        return g
    m = min(lab.labels[0] for lab in g.labels.values())
    if m == 1:
        return g
    return TemporalGraph.finite(
        g.n, {e: [x - (m - 1) for x in lab.labels] for e, lab in g.labels.items()})


def earliest_arrival(g: TemporalGraph, source: int) -> list[float]:
    """Strict-journey temporal distance from ``source`` to every vertex.

    Label-setting search in arrival order; waiting for the next usable label is
    monotone in the arrival time, so the first settlement of a vertex is final.
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    heap = [(0, source)]
    adj = g.adjacency
    while heap:
        t, v = heapq.heappop(heap)
        if t > dist[v]:
            continue
        for w, lab in adj[v]:
            nt = next_usable_label(lab, t)
            if nt is not None and nt < dist[w]:
                dist[w] = nt
                heapq.heappush(heap, (nt, w))
    if g.period is not None:
        cap = g.n * g.period
        assert all(d == INF or d <= cap for d in dist), "periodic arrival exceeded n*p"
    return dist


def distance_matrix(g: TemporalGraph) -> list[list[float]]:
    """Row ``s`` holds ``earliest_arrival(g, s)``."""
    return [earliest_arrival(g, s) for s in range(g.n)]


def reach_set(g: TemporalGraph, v: int) -> set[int]:
    return {u for u, d in enumerate(earliest_arrival(g, v)) if d < INF}


def exclusive_reach(g: TemporalGraph, S: Iterable[int], v: int) -> set[int]:
    """Vertices reached from ``v`` and from no other member of ``S``."""
    S = set(S)
    if v not in S:
        raise ValueError(f"vertex {v} is not in the landmark set")
    out = reach_set(g, v)
    for w in S - {v}:
        out -= reach_set(g, w)
    return out


# --- shape classification ---------------------------------------------------

SHAPE_TAGS = ("path", "cycle", "star", "subdivided-star", "complete", "tree", "general")


@dataclass(frozen=True)
class ShapeClass:
    """Most specific structural class of the underlying graph.

    ``data`` depends on ``tag``: paths carry ``order``; cycles carry
    ``order`` (cyclic, starting at vertex 0); stars and subdivided stars carry
    ``center`` and ``branches`` (vertex lists walking away from the center);
    trees carry ``leaves`` and, for complete binary trees, ``levels``.
    """

    tag: str
    data: Mapping = field(default_factory=dict)


def _walk_path(g: TemporalGraph, start: int, prev: int) -> list[int]:
    out = [start]
    while True:
        nxt = [w for w in g.neighbors(out[-1]) if w != prev]
        if len(nxt) != 1:
            return out
        prev = out[-1]
        out.append(nxt[0])


def path_order(g: TemporalGraph) -> Optional[list[int]]:
    """Vertex order of a path graph, starting from its smaller-index leaf."""
    m = len(g.labels)
    if m != g.n - 1 or not g.is_connected():
        return None
    if g.n == 1:
        return [0]
    if any(g.degree(v) > 2 for v in range(g.n)):
        return None
    start = min(v for v in range(g.n) if g.degree(v) == 1)
    order = [start]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in g.neighbors(order[-1]) if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def cycle_order(g: TemporalGraph) -> Optional[list[int]]:
    if g.n < 3 or len(g.labels) != g.n or not g.is_connected():
        return None
    if any(g.degree(v) != 2 for v in range(g.n)):
        return None
    order = [0, min(g.neighbors(0))]
    while len(order) < g.n:
        a, b = g.neighbors(order[-1])
        order.append(a if a != order[-2] else b)
    return order


def is_tree(g: TemporalGraph) -> bool:
    return len(g.labels) == g.n - 1 and g.is_connected()


def leaves(g: TemporalGraph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def subdivided_star_branches(g: TemporalGraph) -> Optional[tuple[int, list[list[int]]]]:
    """``(center, branches)`` if the graph is a subdivided star with degree >= 3."""
    if not is_tree(g):
        return None
    high = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(high) != 1:
        return None
    c = high[0]
    branches = [_walk_path(g, w, c) for w in sorted(g.neighbors(c))]
    return c, branches


def binary_tree_levels(g: TemporalGraph) -> Optional[dict[int, int]]:
    """Level of every vertex if ``g`` is a complete binary tree rooted at its center."""
    n = g.n
    h = n.bit_length()
    if n != (1 << h) - 1 or h < 2 or not is_tree(g):
        return None
    roots = [v for v in range(n) if g.degree(v) == 2]
    if len(roots) != 1:
        return None
    root = roots[0]
    level = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            kids = [w for w in g.neighbors(v) if w not in level]
            for w in kids:
                level[w] = level[v] + 1
                nxt.append(w)
            if len(kids) not in (0, 2) or (not kids and level[v] != h - 1):
                return None
        frontier = nxt
    return level


def is_complete(g: TemporalGraph) -> bool:
    return len(g.labels) == g.n * (g.n - 1) // 2


def classify_shape(g: TemporalGraph) -> ShapeClass:
    order = path_order(g)
    if order is not None:
        return ShapeClass("path", {"order": order})
    order = cycle_order(g)
    if order is not None:
        return ShapeClass("cycle", {"order": order})
    ss = subdivided_star_branches(g)
    if ss is not None:
        c, branches = ss
        tag = "star" if all(len(b) == 1 for b in branches) else "subdivided-star"
        return ShapeClass(tag, {"center": c, "branches": branches})
    if is_complete(g):
        return ShapeClass("complete", {})
    if is_tree(g):
        data = {"leaves": leaves(g)}
        levels = binary_tree_levels(g)
        if levels is not None:
            data["levels"] = levels
        return ShapeClass("tree", data)
    return ShapeClass("general", {})
