"""Text file formats: edge lists and chronologies.

Edge list: one edge per line as two whitespace-separated non-negative
integers; lines starting with '#' are comments.  A graph whose labels are
contiguous 0..N-1 carries a "# vertices: N" header so isolated vertices
survive a round trip.

Chronology: one vertex label per line, in arrival order.
"""
from __future__ import annotations

import re
from pathlib import Path

from .graph import Chronology, UndirectedGraph, from_edge_list

_VERTICES_HEADER = re.compile(r"#\s*vertices:\s*(\d+)\s*$")


def write_edge_list(g: UndirectedGraph, path: str | Path) -> None:
    labels = sorted(g.vertices)
    contiguous = labels == list(range(len(labels)))
    isolated = [v for v in labels if g.degree(v) == 0]
    if isolated and not contiguous:
        raise ValueError(
            "edge-list format cannot represent isolated vertices "
            "with non-contiguous labels"
        )
    with open(path, "w", encoding="utf-8") as fh:
        if contiguous:
            fh.write(f"# vertices: {len(labels)}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_edge_list(path: str | Path) -> UndirectedGraph:
    pairs: list[tuple[int, int]] = []
    declared = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                m = _VERTICES_HEADER.match(line)
                if m:
                    declared = int(m.group(1))
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected two labels, got {line!r}")
            pairs.append((int(parts[0]), int(parts[1])))
    g = from_edge_list(pairs)
    if declared is not None and g.vertex_count < declared:
        adj = {v: g.neighbors(v) for v in g.vertices}
        for v in range(declared):
            adj.setdefault(v, frozenset())
        g = UndirectedGraph(adj)
    return g


def write_chronology(chron: Chronology, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in chron:
            fh.write(f"{v}\n")


def read_chronology(path: str | Path) -> Chronology:
    order: list[int] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            order.append(int(line))
    return Chronology(order)
