"""Gadget constructions that encode 3-dimensional matching and adjacency
resolving sets as temporal resolving set instances.

Triple indices are 0-based everywhere (``M`` is a set of indices into
``inst.triples``); ground elements and chain positions are 1-based, as in the
instances themselves.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .exact import GuardExceeded
from .graph import TemporalGraph, normalize

Triple = tuple[int, int, int]
MATCHING_GUARD = 12


@dataclass(frozen=True)
class ThreeDMInstance:
    """Triples over three pairwise disjoint ground sets inside ``1..n``.

    The ground sets are the sets of first, second and third coordinates; each
    has at most ``p_size`` elements.  ``target`` is the matching size asked for.
    """

    n: int
    p_size: int
    triples: tuple[Triple, ...]
    target: int

    def __post_init__(self):
        triples = tuple(tuple(int(x) for x in t) for t in self.triples)
        object.__setattr__(self, "triples", triples)
        if self.n < 1 or self.p_size < 1:
            raise ValueError("n and p_size must be positive")
        if not triples:
            raise ValueError("at least one triple is required")
        for t in triples:
            if len(t) != 3:
                raise ValueError(f"{t} is not a triple")
            if not all(1 <= x <= self.n for x in t):
                raise ValueError(f"triple {t} leaves the ground range 1..{self.n}")
        if len(set(triples)) != len(triples):
            raise ValueError("repeated triple")
        X, Y, Z = (set(c) for c in zip(*triples))
        if X & Y or X & Z or Y & Z:
            raise ValueError("coordinate sets must be pairwise disjoint")
        if max(len(X), len(Y), len(Z)) > self.p_size:
            raise ValueError(f"a coordinate set has more than p_size={self.p_size} elements")
        if not 0 <= self.target < len(triples):
            raise ValueError("target must satisfy 0 <= target < number of triples")

    @property
    def s(self) -> int:
        return len(self.triples)

    def is_matching(self, M: Iterable[int]) -> bool:
        M = list(M)
        if len(set(M)) != len(M) or not all(0 <= i < self.s for i in M):
            return False
        return is_matching([self.triples[i] for i in M])


def is_matching(triples: Sequence[Triple]) -> bool:
    """No two triples agree in any coordinate."""
    return all(len({t[c] for t in triples}) == len(triples) for c in range(3))


def brute_force_3dm(inst: Union[ThreeDMInstance, Sequence[Triple]],
                    guard: int = MATCHING_GUARD) -> int:
    """Size of a maximum matching, by subset enumeration from the largest size down."""
    triples = list(inst.triples if isinstance(inst, ThreeDMInstance) else inst)
    if len(triples) > guard:
        raise GuardExceeded(f"{len(triples)} triples exceed the matching guard {guard}")
    for k in range(len(triples), 0, -1):
        if any(is_matching(c) for c in itertools.combinations(triples, k)):
            return k
    return 0


# --- adjacency resolving sets -> complete temporal graphs -------------------------

def reduce_adjacency_to_complete(n: int, edges: Iterable[tuple[int, int]]) -> TemporalGraph:
    """Complete graph labeled 1 on the edges of a static graph and 2 elsewhere.

    Temporal distances are then exactly ``min(dist, 2)``, so adjacency
    resolving sets and temporal resolving sets coincide.
    """
    es = set()
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) leaves the vertex range")
        es.add((min(u, v), max(u, v)))
    static = TemporalGraph.finite(n, {e: [1] for e in es})
    if not static.is_connected():
        raise ValueError("the static graph must be connected")
    return TemporalGraph.finite(
        n, {e: [1 if e in es else 2] for e in itertools.combinations(range(n), 2)})


# --- 3DM -> twice subdivided star -------------------------------------------------

BUDGETS = ("proof", "statement")


def substar_layout(inst: ThreeDMInstance) -> dict[tuple, int]:
    """Vertex ids by name: center ``("u",)``, control ``("t", 1..3)``,
    element vertices ``("a"|"b"|"c", i)``."""
    names = {("u",): 0, ("t", 1): 1, ("t", 2): 2, ("t", 3): 3}
    for i in range(inst.s):
        for k, tag in enumerate("abc"):
            names[(tag, i)] = 4 + 3 * i + k
    return names


def substar_budget(inst: ThreeDMInstance, budget: str = "proof") -> int:
    if budget == "proof":
        return inst.s + 1 - inst.target
    if budget == "statement":
        return inst.s + 2 - inst.target
    raise ValueError(f"budget must be one of {BUDGETS}")


def reduce_3dm_to_substar(inst: ThreeDMInstance, budget: str = "proof"
                          ) -> tuple[TemporalGraph, int]:
    """Star with every edge subdivided twice: one branch per triple plus a control branch.

    The branch of a triple lists its values in increasing order ``a < b < c``;
    its edges carry ``{2, a+4}``, ``{3, b+4}`` and ``{4, c+4}`` from the center
    outward.  The control branch is labeled 2, 1, 3.
    """
    names = substar_layout(inst)
    u = names[("u",)]
    labels = {(u, 1): [2], (1, 2): [1], (2, 3): [3]}
    for i, t in enumerate(inst.triples):
        a, b, c = sorted(t)
        va, vb, vc = names[("a", i)], names[("b", i)], names[("c", i)]
        labels[(u, va)] = [2, a + 4]
        labels[(va, vb)] = [3, b + 4]
        labels[(vb, vc)] = [4, c + 4]
    return TemporalGraph.finite(len(names), labels), substar_budget(inst, budget)


# --- 3DM -> tree with one high-degree vertex ---------------------------------------

def tree_layout(inst: ThreeDMInstance) -> dict[tuple, int]:
    """Vertex ids by name.

    ``("u",)`` is the root; per triple ``i``: spine ``("v", i, j)`` for
    ``j = 1..n``, connectors ``("w", i, j, k)`` between spine ``j`` and ``j+1``
    for ``k = 1..n-1``, element vertices ``("a"|"b"|"c", i)``, and for every
    spine or connector vertex ``x`` a pendant pair ``("t",) + x`` and
    ``("s",) + x``.
    """
    n = inst.n
    names = {("u",): 0}

    def add(key):
        names[key] = len(names)

    for i in range(inst.s):
        chain = []
        for j in range(1, n + 1):
            chain.append(("v", i, j))
        for j in range(1, n):
            for k in range(1, n):
                chain.append(("w", i, j, k))
        for key in chain:
            add(key)
        for tag in "abc":
            add((tag, i))
        for key in chain:
            add(("t",) + key)
            add(("s",) + key)
    return names


def tree_budget(inst: ThreeDMInstance) -> int:
    n, s = inst.n, inst.s
    return s * (n * (n - 1) + 1) + (s - inst.target)


def _tree_labels(inst: ThreeDMInstance, names, pendant_near, pendant_far):
    n = inst.n
    labels = {}

    def put(x, y, lab):
        labels[(names[x], names[y])] = list(lab)

    for i, (x, y, z) in enumerate(inst.triples):
        put(("u",), ("v", i, 1), (n - 1, n))
        for tag, pos in zip("abc", (x, y, z)):
            put(("v", i, pos), (tag, i), (pos * n, pos * n + 1))
        for j in range(1, n):
            put(("v", i, j), ("w", i, j, 1), (j * n, j * n + 1))
            for k in range(1, n - 1):
                put(("w", i, j, k), ("w", i, j, k + 1), (j * n + k, j * n + k + 1))
            put(("w", i, j, n - 1), ("v", i, j + 1), ((j + 1) * n - 1, (j + 1) * n))
        for key in names:
            if key[0] in ("v", "w") and key[1] == i:
                put(("t",) + key, key, pendant_near)
                put(("s",) + key, ("t",) + key, pendant_far)
    return labels


def _reduce_tree(inst, pendant_near, pendant_far, normalized):
    if inst.n < 2:
        raise ValueError("the tree gadget needs n >= 2")
    names = tree_layout(inst)
    g = TemporalGraph.finite(len(names), _tree_labels(inst, names, pendant_near, pendant_far))
    return (normalize(g) if normalized else g), tree_budget(inst)


def reduce_3dm_to_tree(inst: ThreeDMInstance, normalized: bool = True
                       ) -> tuple[TemporalGraph, int]:
    """Tree whose only vertex of degree at least 5 is the root, labels of size <= 2.

    Raw time-steps lie in ``[n-1, n^2+1]``; by default they are shifted down
    to start at 1, which changes no resolving verdict.
    """
    sq = inst.n ** 2
    return _reduce_tree(inst, (sq + 1,), (sq + 1,), normalized)


def reduce_3dm_to_tree_intervals(inst: ThreeDMInstance, normalized: bool = True
                                 ) -> tuple[TemporalGraph, int]:
    """Same tree, but every edge carries exactly two consecutive time-steps."""
    sq = inst.n ** 2
    return _reduce_tree(inst, (sq + 2, sq + 3), (sq + 1, sq + 2), normalized)


# --- matchings -> resolving sets ---------------------------------------------------

def matching_to_resolving_set(inst: ThreeDMInstance, M: Iterable[int], which: str) -> list[int]:
    """Resolving set built from a matching, of size ``budget`` when ``|M| = target``.

    ``which="substar"``: the first control vertex plus the first vertex of
    every unmatched triple branch.  ``which="tree"``: every ``t`` pendant plus
    the first spine vertex of every unmatched branch.
    """
    M = list(M)
    if not inst.is_matching(M):
        raise ValueError(f"{M} is not a matching of the instance")
    free = [i for i in range(inst.s) if i not in set(M)]
    if which == "substar":
        names = substar_layout(inst)
        R = [names[("t", 1)]] + [names[("a", i)] for i in free]
    elif which == "tree":
        if not free:
            # nothing then reaches the root; a sub-matching of size target < s suffices
            raise ValueError("the tree set needs at least one unmatched triple")
        names = tree_layout(inst)
        R = [v for key, v in names.items() if key[0] == "t"]
        R += [names[("v", i, 1)] for i in free]
    else:
        raise ValueError("which must be 'substar' or 'tree'")
    return sorted(R)
