"""Exhaustive minimum resolving sets by subset enumeration.

Candidate sets are tried by increasing size and, within a size, in
lexicographic order of sorted vertex indices, so the returned witness is
deterministic.  ``jobs > 1`` splits each size level into ordered chunks and
keeps the first success in sequential order.
"""
from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Optional, Sequence

from .graph import TemporalGraph, is_tree, leaves
from .verify import DistanceTable


class PoolExhausted(Exception):
    """No subset of a restricted pool resolves the graph; retry with all vertices."""


class GuardExceeded(ValueError):
    """Instance too large for exhaustive search."""


CHUNK = 4096


def _first_in_chunk(table: DistanceTable, chunk: Sequence[tuple[int, ...]]):
    for R in chunk:
        if table.resolves(R):
            return R
    return None


def _chunks(it: Iterator, size: int):
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def _first_resolving(table: DistanceTable, pool: Sequence[int], k: int,
                     executor: Optional[ProcessPoolExecutor], jobs: int):
    combos = itertools.combinations(pool, k)
    if executor is None:
        for R in combos:
            if table.resolves(R):
                return R
        return None
    pending: deque = deque()
    chunks = _chunks(combos, CHUNK)
    for block in itertools.islice(chunks, 2 * jobs):
        pending.append(executor.submit(_first_in_chunk, table, block))
    while pending:
        found = pending.popleft().result()
        if found is not None:
            for f in pending:
                f.cancel()
            return found
        block = next(chunks, None)
        if block is not None:
            pending.append(executor.submit(_first_in_chunk, table, block))
    return None


def min_resolving_bruteforce(g: TemporalGraph, pool: Optional[Iterable[int]] = None,
                             *, start: int = 1, table: Optional[DistanceTable] = None,
                             jobs: int = 1) -> tuple[int, tuple[int, ...]]:
    """Smallest resolving subset of ``pool`` (all vertices by default).

    Raises :class:`PoolExhausted` if a restricted pool contains no resolving set.
    """
    table = table or DistanceTable(g)
    pool = sorted(set(range(g.n) if pool is None else pool))
    executor = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for k in range(max(1, start), len(pool) + 1):
            R = _first_resolving(table, pool, k, executor, jobs)
            if R is not None:
                return k, R
    finally:
        if executor is not None:
            executor.shutdown(cancel_futures=True)
    raise PoolExhausted(f"no resolving set inside pool {pool}")


def all_minimum_resolving_sets(g: TemporalGraph, table: Optional[DistanceTable] = None
                               ) -> list[tuple[int, ...]]:
    table = table or DistanceTable(g)
    for k in range(1, g.n + 1):
        found = [R for R in itertools.combinations(range(g.n), k) if table.resolves(R)]
        if found:
            return found
    raise AssertionError("the full vertex set always resolves")


def min_resolving_periodic_tree(g: TemporalGraph, table: Optional[DistanceTable] = None,
                                jobs: int = 1) -> tuple[int, tuple[int, ...]]:
    """Minimum resolving set of a periodic tree with a 1-labeling.

    Singletons are tried over all vertices; beyond that only leaves are
    enumerated, which loses nothing once the optimum is at least two.
    """
    if not g.is_periodic:
        raise ValueError("periodic labeling required")
    if not is_tree(g):
        raise ValueError("underlying graph must be a tree")
    if not g.is_k_labeling(1):
        raise ValueError("1-labeling required")
    table = table or DistanceTable(g)
    for v in range(g.n):
        if table.resolves((v,)):
            return 1, (v,)
    return min_resolving_bruteforce(g, leaves(g), start=2, table=table, jobs=jobs)


# --- static adjacency resolving sets ------------------------------------------

ADJACENCY_GUARD = 10


def truncated_distances(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    """``min(dist(u, v), 2)`` for a static graph given by an edge list."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return [[0 if u == v else 1 if v in adj[u] else 2 for v in range(n)] for u in range(n)]


def min_adjacency_resolving_bruteforce(n: int, edges: Iterable[tuple[int, int]],
                                       guard: int = ADJACENCY_GUARD) -> int:
    """Minimum adjacency resolving set size of a connected static graph.

    Every vertex lies within truncated distance 2 of any landmark in a
    connected graph, so only separation has to be enumerated.
    """
    if n > guard:
        raise GuardExceeded(f"n={n} exceeds the adjacency oracle guard {guard}")
    rows = truncated_distances(n, edges)
    for k in range(1, n + 1):
        for R in itertools.combinations(range(n), k):
            if len(set(zip(*[rows[s] for s in R]))) == n:
                return k
    raise AssertionError("the full vertex set always separates")
