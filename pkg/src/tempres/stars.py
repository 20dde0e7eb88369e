"""Stars and subdivided stars with one finite label per edge."""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Optional

from .graph import INF, TemporalGraph, earliest_arrival, subdivided_star_branches
from .paths import PathView, solve_path
from .verify import DistanceTable


@dataclass(frozen=True)
class SubdividedStarView:
    """Center plus branches ordered by the label of their first edge.

    Each branch lists its vertices walking away from the center, so
    ``branch[0]`` is the neighbour of the center and ``branch[-1]`` the leaf.
    Ties between equal first labels keep the smaller first vertex first.
    """

    center: int
    branches: tuple[tuple[int, ...], ...]
    first_labels: tuple[int, ...] = field(default=())

    @classmethod
    def from_graph(cls, g: TemporalGraph) -> "SubdividedStarView":
        found = subdivided_star_branches(g)
        if found is None:
            raise ValueError("underlying graph is not a subdivided star with degree >= 3")
        c, branches = found
        firsts = [g.label(c, b[0]).labels[0] for b in branches]
        order = sorted(range(len(branches)), key=lambda i: (firsts[i], branches[i][0]))
        return cls(c, tuple(tuple(branches[i]) for i in order),
                   tuple(firsts[i] for i in order))

    @property
    def degree(self) -> int:
        return len(self.branches)

    @property
    def leaves(self) -> list[int]:
        return [b[-1] for b in self.branches]

    @property
    def ones(self) -> int:
        """Number of branches whose first edge has label 1."""
        return sum(1 for x in self.first_labels if x == 1)

    def branch_path(self, g: TemporalGraph, i: int) -> PathView:
        """Branch ``i`` as a path from its leaf (left) to the center (right)."""
        order = tuple(reversed(self.branches[i])) + (self.center,)
        return PathView.from_graph(g, order)


def _require_finite_one_labeling(g: TemporalGraph):
    if g.is_periodic:
        raise ValueError("finite labeling required")
    if not all(len(lab) == 1 for lab in g.labels.values()):
        raise ValueError("exactly one label per edge required")


def star_center(g: TemporalGraph) -> int:
    if len(g.labels) != g.n - 1 or g.n < 2:
        raise ValueError("underlying graph is not a star")
    centers = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if not centers:
        raise ValueError("underlying graph is not a star")
    return centers[0] if g.n != 2 else 0


def solve_star(g: TemporalGraph) -> list[int]:
    """All vertices except one leaf per distinct center-edge label."""
    _require_finite_one_labeling(g)
    c = star_center(g)
    keep: dict[int, int] = {}
    for leaf in sorted(v for v in range(g.n) if v != c):
        keep.setdefault(g.label(c, leaf).labels[0], leaf)
    R = sorted(set(range(g.n)) - set(keep.values()))
    # Equal-label leaves are twins, so at most one per label class may be left out.
    assert len(R) >= (g.n - 1) - len(keep)
    return R


@dataclass
class Alg2State:
    """Bookkeeping of :func:`solve_subdivided_star_12`, kept for inspection."""

    path_solutions: list[list[int]]
    base: set[int]
    center_branches: list[int]
    q1: set[int] = field(default_factory=set)
    q2: set[int] = field(default_factory=set)
    r: int = 0
    extra: tuple[int, ...] = ()


def _separates_within(rows: list[list[float]], v: int, others) -> bool:
    vec = tuple(row[v] for row in rows)
    return all(tuple(row[u] for row in rows) != vec for u in others)


def solve_subdivided_star_12(g: TemporalGraph, view: Optional[SubdividedStarView] = None,
                             *, max_extra: int = 2, state: Optional[list] = None) -> list[int]:
    """Minimum temporal resolving set of a subdivided star labeled over {1, 2}.

    Each branch is first solved as a path from its leaf to the center.  If no
    branch solution uses the center, their union is optimal.  Otherwise a small
    set of vertices within two time-steps of the center is added, searched by
    increasing size under the locality constraints that bound it.
    """
    _require_finite_one_labeling(g)
    if not g.label_values() <= {1, 2}:
        raise ValueError("labels must lie in {1, 2}")
    view = view or SubdividedStarView.from_graph(g)
    if view.degree < 3:
        raise ValueError("degree < 3: solve as a path instead")
    c = view.center

    sols = [solve_path(view.branch_path(g, i)) for i in range(view.degree)]
    base = set().union(*sols) - {c}
    in_bc = [i for i, R in enumerate(sols) if c in R]
    st = Alg2State(sols, base, list(in_bc))
    if state is not None:
        state.append(st)
    if not in_bc:
        return sorted(base)

    rows = {v: earliest_arrival(g, v) for v in base | {c}}
    for i in in_bc:
        vi = view.branches[i][0]
        own = [x for x in sols[i] if x != c]
        if not own:
            continue
        own_rows = [rows[x] for x in own]
        reached = any(row[vi] != INF for row in own_rows)
        if reached and not _separates_within(own_rows, vi, view.branches[i][1:]):
            (st.q1 if view.first_labels[i] == 1 else st.q2).add(vi)
    bc = [i for i in in_bc if not (st.q2 & set(view.branches[i]))]
    st.center_branches = bc
    st.r = sum(1 for i in bc if st.q1 & set(view.branches[i]))

    branch_of = {v: i for i, b in enumerate(view.branches) for v in b}
    hop2 = {b[1] for b in view.branches if len(b) > 1}
    from_c = rows[c]
    bc_vertices = {v for i in bc for v in view.branches[i]} | {c}
    candidates = sorted(v for v in bc_vertices if from_c[v] != INF and v not in base)

    table = DistanceTable(g)
    base_list = sorted(base)
    for size in range(0, len(bc) - 1 - st.r + max_extra + 1):
        for extra in itertools.combinations(candidates, size):
            branches = [branch_of[v] for v in extra if v != c]
            if len(branches) != len(set(branches)):
                continue
            if sum(1 for v in extra if v in st.q1) > 1:
                continue
            if sum(1 for v in extra if v in hop2) > 1:
                continue
            R = base_list + list(extra)
            if R and table.resolves(R):
                st.extra = extra
                return sorted(R)
    if max_extra < 3:
        warnings.warn("no completion found up to the proven size bound; widening the search")
        return solve_subdivided_star_12(g, view, max_extra=3, state=state)
    raise RuntimeError("no resolving completion found")
