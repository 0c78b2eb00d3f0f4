"""netchrono: predict node arrival order in preferential-attachment networks."""
from .ba import (
    BAConfig,
    DegreeDistribution,
    degree_histogram,
    estimate_power_law_exponent,
    generate_ba,
    shuffle_vertex_labels,
)
from .baselines import BinOrdering, centrality_bins, degree_bins, ranking_to_chronology
from .centrality import (
    CentralityKind,
    ScoreTable,
    betweenness_centrality,
    compute,
    degree_centrality,
    eigenvector_centrality,
)
from .dcr import differential_core_ranking, rank_descending
from .evaluation import BucketRow, bqm, eta_pairs, probability_bucket_table
from .graph import (
    Chronology,
    UndirectedGraph,
    WeightedDigraph,
    from_edge_list,
    is_acyclic,
    remove_vertices,
    strongly_connected_components,
)
from .io import read_chronology, read_edge_list, write_chronology, write_edge_list
from .reconstruction import (
    PairProbability,
    PipelineConfig,
    SyntheticBatch,
    bin_by_indegree,
    break_cycles,
    child_seed,
    map_and_predict,
    pairwise_digraph,
    reconstruct,
    reconstruct_with_ranking,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "BAConfig",
    "BinOrdering",
    "BucketRow",
    "CentralityKind",
    "Chronology",
    "DegreeDistribution",
    "PairProbability",
    "PipelineConfig",
    "ScoreTable",
    "SyntheticBatch",
    "UndirectedGraph",
    "WeightedDigraph",
    "betweenness_centrality",
    "bin_by_indegree",
    "bqm",
    "break_cycles",
    "centrality_bins",
    "child_seed",
    "compute",
    "degree_bins",
    "degree_centrality",
    "degree_histogram",
    "differential_core_ranking",
    "eigenvector_centrality",
    "estimate_power_law_exponent",
    "eta_pairs",
    "from_edge_list",
    "generate_ba",
    "is_acyclic",
    "map_and_predict",
    "pairwise_digraph",
    "probability_bucket_table",
    "rank_descending",
    "ranking_to_chronology",
    "read_chronology",
    "read_edge_list",
    "reconstruct",
    "reconstruct_with_ranking",
    "remove_vertices",
    "shuffle_vertex_labels",
    "strongly_connected_components",
    "synthesize",
    "write_chronology",
    "write_edge_list",
]
