"""Arrival-order reconstruction via synthetic network ensembles.

Pipeline: rank the reference network by DCM, generate alpha synthetic BA
networks with the same (|V|, C), rank each the same way, biject ranks to
turn each synthetic chronology into a prediction list for the reference
network, aggregate the lists into a pairwise arrival-probability digraph,
delete minimum-weight edges until it is acyclic, then peel the resulting
DAG by minimum in-degree into chronological bins.

Equal-DCM vertices need care: a fixed tie order would make every
synthetic assert the same arbitrary within-tie arrival order, turning
ties into unanimous (weight ~1.0) digraph edges that are pure artifact.
The pipeline therefore orders ties by a salted hash of the vertex label,
with a distinct salt per synthetic network, so tie assertions decorrelate
across the ensemble and their pair probabilities settle near 0.5.  All
salts derive from master_seed; results stay bit-reproducible.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ba import BAConfig, generate_ba
from .baselines import BinOrdering
from .centrality import CentralityKind, ScoreTable
from .dcr import differential_core_ranking
from .errors import (
    CyclicInputError,
    EmptyBatchError,
    InvalidConfigError,
    SizeMismatchError,
)
from .graph import Chronology, UndirectedGraph, WeightedDigraph, is_acyclic


@dataclass(frozen=True)
class PipelineConfig:
    """Reconstruction parameters.

    alpha synthetic networks are generated with `connections` edges per
    arrival; `kind` is the base centrality of the differential core
    ranking; all randomness derives from master_seed.
    """

    alpha: int
    connections: int
    kind: CentralityKind
    master_seed: int

    def __post_init__(self):
        if self.alpha < 1:
            raise InvalidConfigError(f"alpha must be >= 1, got {self.alpha}")
        if self.connections < 1:
            raise InvalidConfigError(f"connections must be >= 1, got {self.connections}")


@dataclass(frozen=True)
class SyntheticBatch:
    """Generated networks with their recorded chronologies, indexed 1..alpha."""

    entries: tuple[tuple[UndirectedGraph, Chronology], ...]


@dataclass(frozen=True)
class PairProbability:
    """Probability p that u arrived before v, estimated over prediction lists."""

    u: int
    v: int
    p: float

    def __post_init__(self):
        if not (0.0 <= self.p <= 1.0):
            raise ValueError(f"probability {self.p} outside [0, 1]")


def child_seed(master_seed: int, index: int) -> int:
    """Derived 64-bit seed for synthetic network `index` (1-based; 0 is
    reserved for the reference ranking's tie salt).

    numpy's SeedSequence spawn-key mixing: deterministic, documented, and
    collision-resistant across indices, so batches stay reproducible under
    any parallel schedule.
    """
    ss = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return int(ss.generate_state(1, np.uint64)[0])


def synthesize(n: int, cfg: PipelineConfig) -> SyntheticBatch:
    """alpha independent BA networks with n vertices and cfg.connections."""
    if n <= cfg.connections:
        raise InvalidConfigError(f"need n > connections, got n={n} C={cfg.connections}")
    entries = []
    for i in range(1, cfg.alpha + 1):
        entries.append(generate_ba(BAConfig(n, cfg.connections, child_seed(cfg.master_seed, i))))
    return SyntheticBatch(tuple(entries))


def _mix64(x: int) -> int:
    # splitmix64 finalizer: cheap, well-dispersed 64-bit hash
    x &= 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return x ^ (x >> 31)


def _salted_rank(table: ScoreTable, salt: int) -> list[int]:
    """Score-descending vertex order with salted-hash tie-breaking."""
    return sorted(table.scores, key=lambda v: (-table.scores[v], _mix64(v ^ salt)))


def map_and_predict(
    ref_rank: list[int],
    syn_rank: list[int],
    syn_chronology: Chronology,
) -> Chronology:
    """Prediction list from one synthetic network.

    Position k of syn_rank maps to position k of ref_rank (equal-importance
    bijection); the synthetic chronology re-read through that map is the
    predicted arrival order of the reference network.
    """
    if not (len(ref_rank) == len(syn_rank) == len(syn_chronology)):
        raise SizeMismatchError(
            f"rank/chronology sizes differ: {len(ref_rank)}, {len(syn_rank)}, "
            f"{len(syn_chronology)}"
        )
    if set(syn_rank) != set(syn_chronology.order):
        raise SizeMismatchError("syn_rank and syn_chronology cover different vertices")
    position = {u: k for k, u in enumerate(syn_rank)}
    return Chronology(ref_rank[position[w]] for w in syn_chronology)


def pairwise_digraph(pred_lists: list[Chronology], alpha: int) -> WeightedDigraph:
    """Arrival-probability digraph over all vertex pairs.

    P(u, v) is the fraction of prediction lists placing u before v.  Each
    unordered pair contributes exactly one edge, oriented toward the more
    probable order and weighted by its probability; exact 0.5 ties orient
    min-label to max-label so the result is independent of pair iteration
    order.
    """
    if alpha == 0 or not pred_lists:
        raise EmptyBatchError("need at least one prediction list")
    if len(pred_lists) != alpha:
        raise SizeMismatchError(f"got {len(pred_lists)} lists for alpha={alpha}")
    vertex_set = set(pred_lists[0].order)
    labels = np.fromiter(sorted(vertex_set), dtype=np.int64)
    index = {int(v): i for i, v in enumerate(labels)}
    n = len(labels)

    before = np.zeros((n, n), dtype=np.int32)
    pos = np.empty(n, dtype=np.int64)
    for chron in pred_lists:
        if set(chron.order) != vertex_set:
            raise SizeMismatchError("prediction lists cover different vertex sets")
        for k, v in enumerate(chron):
            pos[index[v]] = k
        before += pos[:, None] < pos[None, :]

    iu, iv = np.triu_indices(n, k=1)
    cnt = before[iu, iv].astype(np.int64)
    u_first = 2 * cnt > alpha
    v_first = 2 * cnt < alpha  # exact ties fall through to min->max with weight 0.5
    src = np.where(v_first, iv, iu)
    dst = np.where(v_first, iu, iv)
    w = np.where(u_first, cnt / alpha, 1.0 - cnt / alpha)
    return WeightedDigraph._from_arrays(labels, src, dst, w)


def break_cycles(dg: WeightedDigraph) -> WeightedDigraph:
    """Delete minimum-weight edges until the digraph is acyclic.

    Loop semantics: while a directed cycle exists, remove the remaining
    edge of least weight, ties by smallest (source, target) label pair.
    Deletion never creates cycles, so the removed set is exactly the
    shortest prefix of the ascending (weight, source, target) edge order
    whose removal leaves the graph acyclic; that prefix length is found by
    binary search with an SCC-based acyclicity probe per step.
    """
    labels, src, dst, w = dg.arrays()
    m = len(src)
    if dg.vertex_count == 0 or m == 0 or is_acyclic(dg):
        return dg
    order = np.lexsort((dst, src, w))
    rank = np.empty(m, dtype=np.int64)
    rank[order] = np.arange(m)

    def acyclic_without_first(k: int) -> bool:
        keep = rank >= k
        return is_acyclic(WeightedDigraph._from_arrays(labels, src[keep], dst[keep], w[keep]))

    lo, hi = 0, m  # removing all edges is trivially acyclic
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if acyclic_without_first(mid):
            hi = mid
        else:
            lo = mid
    keep = rank >= hi
    return WeightedDigraph._from_arrays(labels, src[keep], dst[keep], w[keep])


def bin_by_indegree(dag: WeightedDigraph) -> BinOrdering:
    """Peel the DAG into bins of minimum remaining in-degree.

    Each round recomputes in-degrees on the surviving induced subgraph,
    bins every vertex attaining the minimum, and removes them; bins are
    ordered by creation.
    """
    if not is_acyclic(dag):
        raise CyclicInputError("binning requires an acyclic digraph")
    labels, src, dst, _ = dag.arrays()
    n = len(labels)
    alive = np.ones(n, dtype=bool)
    bins: list[frozenset[int]] = []
    while alive.any():
        valid = alive[src] & alive[dst]
        indeg = np.bincount(dst[valid], minlength=n)
        min_in = indeg[alive].min()
        members = alive & (indeg == min_in)
        bins.append(frozenset(int(labels[i]) for i in np.flatnonzero(members)))
        alive &= ~members
    return BinOrdering(tuple(bins))


def _synthetic_prediction(task: tuple) -> tuple[int, ...]:
    n, connections, seed, kind_value, ref_rank = task
    g, chron = generate_ba(BAConfig(n, connections, seed))
    table = differential_core_ranking(g, CentralityKind(kind_value))
    rank = _salted_rank(table, _mix64(seed))
    return map_and_predict(list(ref_rank), rank, chron).order


def reconstruct(
    g_m: UndirectedGraph,
    cfg: PipelineConfig,
    jobs: int | None = None,
) -> tuple[BinOrdering, WeightedDigraph]:
    """Full pipeline; returns the bin ordering and the pre-cycle-break digraph.

    The synthetic batch is exactly synthesize(|V_m|, cfg): worker processes
    regenerate network i from child_seed(cfg.master_seed, i), and results
    merge by index, so output is identical for any `jobs` value.
    """
    bins, dg, _ = reconstruct_with_ranking(g_m, cfg, jobs)
    return bins, dg


def reconstruct_with_ranking(
    g_m: UndirectedGraph,
    cfg: PipelineConfig,
    jobs: int | None = None,
) -> tuple[BinOrdering, WeightedDigraph, list[int]]:
    """reconstruct() plus the reference network's own DCM-descending ranking.

    The ranking drives the synthetic mappings anyway; callers comparing it
    against a true chronology can take it from here instead of paying for
    a second differential core ranking.
    """
    n = g_m.vertex_count
    if n == 0:
        raise ValueError("reconstruction requires a nonempty reference network")
    if n <= cfg.connections:
        raise InvalidConfigError(f"need |V_m| > connections, got {n} <= {cfg.connections}")
    ref_table = differential_core_ranking(g_m, cfg.kind)
    ref_rank = _salted_rank(ref_table, _mix64(child_seed(cfg.master_seed, 0)))
    tasks = [
        (n, cfg.connections, child_seed(cfg.master_seed, i), cfg.kind.value, tuple(ref_rank))
        for i in range(1, cfg.alpha + 1)
    ]
    if jobs is not None and jobs > 1 and cfg.alpha > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, cfg.alpha)) as pool:
            orders = list(pool.map(_synthetic_prediction, tasks))
    else:
        orders = [_synthetic_prediction(t) for t in tasks]
    pred_lists = [Chronology(o) for o in orders]
    dg = pairwise_digraph(pred_lists, cfg.alpha)
    bins = bin_by_indegree(break_cycles(dg))
    return bins, dg, ref_rank


def default_jobs() -> int:
    """--jobs default: NETCHRONO_JOBS env var, else the hardware thread count."""
    env = os.environ.get("NETCHRONO_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InvalidConfigError(f"NETCHRONO_JOBS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1
