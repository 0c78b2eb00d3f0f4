"""Centrality-only arrival-order baselines: degree bins and equal-size bins."""
from __future__ import annotations

from dataclasses import dataclass

from .centrality import CentralityKind, compute
from .errors import InvalidDeltaError
from .graph import Chronology, UndirectedGraph


@dataclass(frozen=True)
class BinOrdering:
    """Ordered disjoint nonempty vertex sets whose union is the vertex set.

    Earlier bins are predicted to hold earlier arrivals; delta is the bin
    count.
    """

    bins: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.bins:
            if not b:
                raise ValueError("bins must be nonempty")
            if seen & b:
                raise ValueError("bins must be pairwise disjoint")
            seen |= b

    @property
    def delta(self) -> int:
        return len(self.bins)

    def covered(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.bins:
            out |= b
        return frozenset(out)


def degree_bins(g: UndirectedGraph) -> BinOrdering:
    """One bin per distinct degree value, highest degree first."""
    if g.vertex_count == 0:
        raise ValueError("degree binning requires a nonempty graph")
    by_degree: dict[int, set[int]] = {}
    for v in g.vertices:
        by_degree.setdefault(g.degree(v), set()).add(v)
    ordered = sorted(by_degree.items(), key=lambda kv: -kv[0])
    return BinOrdering(tuple(frozenset(members) for _, members in ordered))


def _descending_order(g: UndirectedGraph, kind: CentralityKind) -> list[int]:
    scores = compute(g, kind).scores
    return sorted(scores, key=lambda v: (-scores[v], v))


def centrality_bins(g: UndirectedGraph, kind: CentralityKind, delta: int) -> BinOrdering:
    """delta near-equal bins of the centrality-descending vertex order.

    When |V| = q*delta + r the first r bins get q+1 vertices, so earlier
    (higher-confidence) bins are never the smaller ones.
    """
    n = g.vertex_count
    if not (1 <= delta <= n):
        raise InvalidDeltaError(f"delta must satisfy 1 <= delta <= |V|={n}, got {delta}")
    order = _descending_order(g, kind)
    q, r = divmod(n, delta)
    bins: list[frozenset[int]] = []
    at = 0
    for i in range(delta):
        size = q + 1 if i < r else q
        bins.append(frozenset(order[at:at + size]))
        at += size
    return BinOrdering(tuple(bins))


def ranking_to_chronology(g: UndirectedGraph, kind: CentralityKind) -> Chronology:
    """Full vertex list in centrality-descending order (ties by label)."""
    if g.vertex_count == 0:
        raise ValueError("ranking requires a nonempty graph")
    return Chronology(_descending_order(g, kind))
