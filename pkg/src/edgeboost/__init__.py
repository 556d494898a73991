"""Link-prediction-boosted consensus clustering for incomplete networks.

The pipeline scores likely missing edges, repeatedly imputes a random
batch of them before running a community detector, and aggregates the
resulting ensemble through a thresholded co-community network.
"""

from .benchgen import BenchmarkSpec, PlantedNetwork, generate, measured_mixing, perturb
from .boost import BoostConfig, run
from .community import (
    DetectorKind,
    detect,
    label_propagation,
    louvain,
    modularity,
)
from .consensus import (
    CoCommunityNetwork,
    ConsensusResult,
    ThresholdDiagnostic,
    attach_singletons,
    build_cocommunity,
    community_consensus_score,
    partition_score,
    select_threshold,
)
from .errors import (
    DetectorConfigError,
    EdgeBoostError,
    EdgeFileFormatError,
    EdgelessGraphError,
    EmptyScoredSetError,
    GenerationInfeasibleError,
    InvalidArgumentError,
    InvariantViolationError,
)
from .fileio import (
    partition_from_pairs,
    read_edge_list,
    read_partition,
    write_edge_list,
    write_partition,
    write_per_tau_csv,
)
from .graph import (
    DeletionSpec,
    Graph,
    UnionFind,
    connected_components,
    delete_edges_random,
    prune_below,
)
from .imputation import EdgeDistribution, build_distribution, impute, sample_k
from .linkpred import (
    PredictorKind,
    ScoredEdgeSet,
    candidate_edges,
    intra_edge_precision,
    score,
    score_all,
)
from .metrics import EvalReport, evaluate, nmi, relative_error
from .partition import Partition
from .rng import make_rng, spawn_seed
from .sweep import run_sweep

__version__ = "0.1.0"

__all__ = [
    "BenchmarkSpec",
    "BoostConfig",
    "CoCommunityNetwork",
    "ConsensusResult",
    "DeletionSpec",
    "DetectorConfigError",
    "DetectorKind",
    "EdgeBoostError",
    "EdgeDistribution",
    "EdgeFileFormatError",
    "EdgelessGraphError",
    "EmptyScoredSetError",
    "EvalReport",
    "GenerationInfeasibleError",
    "Graph",
    "InvalidArgumentError",
    "InvariantViolationError",
    "Partition",
    "PlantedNetwork",
    "PredictorKind",
    "ScoredEdgeSet",
    "ThresholdDiagnostic",
    "UnionFind",
    "attach_singletons",
    "build_cocommunity",
    "build_distribution",
    "candidate_edges",
    "community_consensus_score",
    "connected_components",
    "delete_edges_random",
    "detect",
    "evaluate",
    "generate",
    "impute",
    "intra_edge_precision",
    "label_propagation",
    "louvain",
    "make_rng",
    "measured_mixing",
    "modularity",
    "nmi",
    "partition_from_pairs",
    "partition_score",
    "perturb",
    "prune_below",
    "read_edge_list",
    "read_partition",
    "relative_error",
    "run",
    "run_sweep",
    "sample_k",
    "score",
    "score_all",
    "select_threshold",
    "spawn_seed",
    "write_edge_list",
    "write_partition",
    "write_per_tau_csv",
]
