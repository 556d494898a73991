"""End-to-end boosting pipeline.

Scores the missing-edge candidates once, then runs n independent
iterations of (sample an edge batch, impute, detect), and aggregates the
resulting ensemble through the co-community network.  Each iteration
owns an RNG stream derived from (master_seed, iteration), so the result
is a pure function of the inputs no matter how the iterations are
scheduled.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .community import DetectorKind, detect
from .consensus import ConsensusResult, attach_singletons, build_cocommunity, select_threshold
from .errors import EmptyScoredSetError, InvalidArgumentError
from .graph import Graph
from .imputation import EdgeDistribution, build_distribution, impute, sample_k
from .linkpred import PredictorKind, score_all
from .partition import Partition
from .rng import make_rng

_SEED_BOUND = 2**63


@dataclass(frozen=True, kw_only=True)
class BoostConfig:
    detector: DetectorKind
    predictor: PredictorKind = PredictorKind.JACCARD
    n_iterations: int = 50
    master_seed: int = 0
    fixed_k: int | None = None

    def __post_init__(self):
        if self.n_iterations < 1:
            raise InvalidArgumentError("n_iterations must be >= 1")
        if self.fixed_k is not None and self.fixed_k < 1:
            raise InvalidArgumentError("fixed_k must be >= 1")


def _iteration(g: Graph, cfg: BoostConfig, dist: EdgeDistribution | None, i: int) -> Partition:
    # Detector seed is drawn before any sampling so both degraded and
    # normal paths consume the stream identically up to that point.
    rng = make_rng(cfg.master_seed, i)
    detector_seed = int(rng.integers(_SEED_BOUND))
    if dist is None:
        target = g
    else:
        target = impute(g, sample_k(dist, g.m, rng, fixed_k=cfg.fixed_k))
    return detect(target, cfg.detector, detector_seed)


def run(g: Graph, cfg: BoostConfig, workers: int = 1) -> ConsensusResult:
    """Boost a detector on ``g``: impute-detect n times, then take consensus.

    When the graph has no scorable missing edges (a clique, or no
    length-2 paths), imputation cannot contribute; the detector still
    runs n times on ``g`` itself and the degradation is flagged in the
    result.
    """
    if g.n == 0:
        raise InvalidArgumentError("graph has no nodes")
    if workers < 1:
        raise InvalidArgumentError("workers must be >= 1")

    dist = None
    degraded = True
    if g.m > 0:
        try:
            dist = build_distribution(score_all(g, cfg.predictor))
            degraded = False
        except EmptyScoredSetError:
            pass

    n = cfg.n_iterations
    partitions: list[Partition | None] = [None] * n
    if workers == 1:
        for i in range(1, n + 1):
            partitions[i - 1] = _iteration(g, cfg, dist, i)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(_iteration, g, cfg, dist, i): i for i in range(1, n + 1)}
            for fut, i in futures.items():
                partitions[i - 1] = fut.result()

    gcc = build_cocommunity(g.n, partitions)
    result = select_threshold(gcc, n)
    return replace(
        result,
        final_partition=attach_singletons(gcc, result.final_partition),
        ensemble_community_counts=tuple(p.n_communities for p in partitions),
        imputation_degraded=degraded,
    )
