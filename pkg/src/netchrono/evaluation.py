"""Prediction quality metrics.

eta_pairs scores a full predicted arrival list by the fraction of vertex
pairs in correct relative order; bqm scores a bin ordering by averaging,
over bin pairs, the fraction of cross-bin vertex pairs in correct true
order; the probability bucket table summarizes how often pre-cycle-break
digraph edges of a given confidence point the right way.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .baselines import BinOrdering
from .errors import (
    DegenerateBinsError,
    NotAPartitionError,
    SizeMismatchError,
    TooSmallError,
)
from .graph import Chronology, WeightedDigraph


@dataclass(frozen=True)
class BucketRow:
    """One weight bucket (range_low, range_high] of digraph edges."""

    range_low: float
    range_high: float
    edge_fraction: float
    correct_fraction: float
    edge_count: int


def eta_pairs(truth: Chronology, predicted: Chronology) -> float:
    """Fraction of unordered vertex pairs whose relative order matches truth."""
    n = len(truth)
    if set(truth.order) != set(predicted.order):
        raise SizeMismatchError("truth and predicted must be permutations of the same set")
    if n < 2:
        raise TooSmallError("need at least 2 vertices to compare pair orders")
    pos = truth.positions()
    seq = [pos[v] for v in predicted]
    return _concordant_pairs(seq) / comb(n, 2)


def _concordant_pairs(seq: list[int]) -> int:
    """Count pairs i < j with seq[i] < seq[j], via a Fenwick tree."""
    n = len(seq)
    tree = [0] * (n + 1)
    total = 0
    for x in seq:
        i = x  # prefix count of values < x among those already seen
        while i > 0:
            total += tree[i]
            i -= i & (-i)
        i = x + 1
        while i <= n:
            tree[i] += 1
            i += i & (-i)
    return total


def bqm(truth: Chronology, bins: BinOrdering) -> float:
    """Binning quality: mean over bin pairs (i < j) of beta(i, j).

    beta(i, j) is the fraction of (u in B_i, v in B_j) pairs with u truly
    arriving before v.
    """
    if bins.covered() != set(truth.order):
        raise NotAPartitionError("bins must partition exactly the truth vertex set")
    delta = bins.delta
    if delta < 2:
        raise DegenerateBinsError("bqm needs at least 2 bins")
    pos = truth.positions()
    bin_positions = [np.sort(np.array([pos[v] for v in b], dtype=np.int64)) for b in bins.bins]
    total = 0.0
    for i in range(delta):
        earlier = bin_positions[i]
        for j in range(i + 1, delta):
            later = bin_positions[j]
            correct = int(np.searchsorted(earlier, later, side="left").sum())
            total += correct / (len(earlier) * len(later))
    return total / comb(delta, 2)


def probability_bucket_table(
    dg: WeightedDigraph,
    truth: Chronology,
    bucket_width: float = 0.1,
) -> list[BucketRow]:
    """Bucket digraph edges by weight over (0.5, 1.0] and score each bucket.

    Per bucket: the fraction of all edges whose weight lands in it, and,
    among those, the fraction of edges (u, v) with u truly arriving before
    v.  Weight exactly 0.5 (an orientation tie) counts into the lowest
    bucket.  bucket_width must divide 0.5 evenly.
    """
    n_buckets = round(0.5 / bucket_width)
    if n_buckets < 1 or abs(n_buckets * bucket_width - 0.5) > 1e-9:
        raise ValueError(f"bucket_width {bucket_width} does not divide 0.5 evenly")
    pos = truth.positions()
    labels, src, dst, w = dg.arrays()
    missing = dg.vertices - set(truth.order)
    if missing:
        raise SizeMismatchError(f"truth is missing {len(missing)} digraph vertices")

    m = len(w)
    idx = np.ceil((w - 0.5) / bucket_width - 1e-9).astype(np.int64) - 1
    idx = np.clip(idx, 0, n_buckets - 1)
    truth_pos = np.array([pos[int(v)] for v in labels], dtype=np.int64)
    correct = truth_pos[src] < truth_pos[dst]

    rows: list[BucketRow] = []
    for b in range(n_buckets):
        in_bucket = idx == b
        count = int(in_bucket.sum())
        rows.append(
            BucketRow(
                range_low=0.5 + b * bucket_width,
                range_high=0.5 + (b + 1) * bucket_width,
                edge_fraction=count / m if m else 0.0,
                correct_fraction=float(correct[in_bucket].mean()) if count else 0.0,
                edge_count=count,
            )
        )
    return rows
