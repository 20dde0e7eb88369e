"""Resolving-set verification with distance-vector evidence."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graph import INF, TemporalGraph, distance_matrix, earliest_arrival

# One entry per landmark, landmarks in ascending order; INF marks "not reached".
DistanceVector = tuple

RESOLVING = "resolving"
NOT_REACHING = "not-reaching"
NOT_SEPARATING = "not-separating"


@dataclass(frozen=True)
class ResolutionCertificate:
    verdict: str
    landmarks: tuple[int, ...]
    vectors: dict[int, DistanceVector]
    witness: Optional[Union[int, tuple[int, int]]] = None

    @property
    def is_resolving(self) -> bool:
        return self.verdict == RESOLVING

    def recheck(self) -> bool:
        """Confirm the witness using only the stored vectors."""
        if self.verdict == RESOLVING:
            return self.witness is None and len(set(self.vectors.values())) == len(self.vectors)
        if self.verdict == NOT_REACHING:
            return all(d == INF for d in self.vectors[self.witness])
        u, v = self.witness
        return u != v and self.vectors[u] == self.vectors[v]


def _landmarks(g: TemporalGraph, R: Iterable[int]) -> tuple[int, ...]:
    R = tuple(sorted(set(R)))
    if not R:
        raise ValueError("landmark set must be non-empty")
    for r in R:
        if not 0 <= r < g.n:
            raise ValueError(f"landmark {r} is not a vertex")
    return R


def distance_vectors(g: TemporalGraph, R: Iterable[int]) -> dict[int, DistanceVector]:
    R = _landmarks(g, R)
    rows = [earliest_arrival(g, s) for s in R]
    return {v: vec for v, vec in enumerate(zip(*rows))}


def _first_twin_pair(vectors: dict[int, DistanceVector]) -> Optional[tuple[int, int]]:
    first_seen: dict[DistanceVector, int] = {}
    best = None
    for v in sorted(vectors):
        vec = vectors[v]
        if vec in first_seen:
            pair = (first_seen[vec], v)
            if best is None or pair < best:
                best = pair
        else:
            first_seen[vec] = v
    return best


def check_resolving(g: TemporalGraph, R: Iterable[int]) -> ResolutionCertificate:
    """Decide whether ``R`` reaches and separates every vertex of ``g``.

    The reach condition is checked first.  Witnesses are the smallest
    unreached vertex, or the lexicographically smallest pair of vertices with
    identical vectors.
    """
    R = _landmarks(g, R)
    vectors = distance_vectors(g, R)
    for v in range(g.n):
        if all(d == INF for d in vectors[v]):
            return ResolutionCertificate(NOT_REACHING, R, vectors, v)
    pair = _first_twin_pair(vectors)
    if pair is not None:
        return ResolutionCertificate(NOT_SEPARATING, R, vectors, pair)
    return ResolutionCertificate(RESOLVING, R, vectors)


def is_resolving(g: TemporalGraph, R: Iterable[int]) -> bool:
    return check_resolving(g, R).is_resolving


def is_separating_only(g: TemporalGraph, R: Iterable[int]) -> bool:
    vectors = distance_vectors(g, R)
    return len(set(vectors.values())) == g.n


class DistanceTable:
    """All-pairs temporal distances, for checking many candidate sets quickly."""

    def __init__(self, g: TemporalGraph, matrix: Optional[Sequence[Sequence[float]]] = None):
        self.n = g.n
        self.rows = [tuple(r) for r in (matrix if matrix is not None else distance_matrix(g))]
        self.full = (1 << g.n) - 1
        self.reach = [sum(1 << v for v, d in enumerate(row) if d != INF) for row in self.rows]

    def reaches(self, R: Sequence[int]) -> bool:
        m = 0
        for s in R:
            m |= self.reach[s]
        return m == self.full

    def separates(self, R: Sequence[int]) -> bool:
        return len(set(zip(*[self.rows[s] for s in R]))) == self.n

    def resolves(self, R: Sequence[int]) -> bool:
        return bool(R) and self.reaches(R) and self.separates(R)
