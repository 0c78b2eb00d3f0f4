"""Differential core ranking.

Peel the graph level by level (each level removes every vertex of current
minimum degree) and charge each vertex the absolute change of its base
centrality between consecutive levels; removed vertices are charged their
full last value.  The accumulated total is the vertex's DCM score.
"""
from __future__ import annotations

from typing import Callable

from .centrality import CentralityKind, ScoreTable, compute
from .graph import UndirectedGraph, remove_vertices


def _level_scores(g: UndirectedGraph, kind: CentralityKind) -> dict[int, float]:
    """Base centrality of one peeling level, on a size-independent scale.

    Peeled levels shrink, so the summands |change| must be comparable
    across levels.  Degree (divided by |V|-1) and eigenvector (unit norm)
    are already size-independent; raw betweenness grows with the squared
    level size, so it is rescaled by the unordered pair count, which
    leaves every within-level ranking untouched.
    """
    table = compute(g, kind)
    if kind is CentralityKind.BETWEENNESS and g.vertex_count >= 3:
        n = g.vertex_count
        scale = 2.0 / ((n - 1) * (n - 2))
        return {v: s * scale for v, s in table.scores.items()}
    return dict(table.scores)


def differential_core_ranking(
    g: UndirectedGraph,
    kind: CentralityKind,
    score_fn: Callable[[UndirectedGraph], ScoreTable] | None = None,
) -> ScoreTable:
    """DCM score per vertex of g, tagged "dcm".

    score_fn overrides the per-level base measure entirely (used by tests
    to inject scaled centralities).  Each peeling level is scored exactly
    once: a level's table is reused as the previous-level table of the
    next iteration.
    """
    if g.vertex_count == 0:
        raise ValueError("differential core ranking requires a nonempty graph")
    if score_fn is not None:
        score = lambda h: dict(score_fn(h).scores)  # noqa: E731
    else:
        score = lambda h: _level_scores(h, kind)  # noqa: E731

    dcm = {v: 0.0 for v in g.vertices}
    current_graph = g
    current = score(current_graph)
    while current_graph.vertex_count > 0:
        degrees = {v: current_graph.degree(v) for v in current_graph.vertices}
        min_degree = min(degrees.values())
        peeled = {v for v, d in degrees.items() if d == min_degree}
        next_graph = remove_vertices(current_graph, peeled)
        nxt = score(next_graph) if next_graph.vertex_count > 0 else {}
        for v in current_graph.vertices:
            if v in peeled:
                dcm[v] += abs(current[v])
            else:
                dcm[v] += abs(nxt[v] - current[v])
        current_graph, current = next_graph, nxt
    return ScoreTable(dcm, "dcm")


def rank_descending(t: ScoreTable) -> list[int]:
    """Vertices by score descending; equal scores break by ascending label."""
    return sorted(t.scores, key=lambda v: (-t.scores[v], v))
