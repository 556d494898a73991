"""Sampling distribution over scored missing edges, and graph imputation.

Each candidate edge gets probability score / sum(scores).  Sampling k
edges without replacement uses exponential keys (draw Exp(1)/weight per
edge, keep the k smallest), whose single-draw marginal matches the
score-proportional distribution exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyScoredSetError, InvalidArgumentError, InvariantViolationError
from .graph import Graph
from .linkpred import ScoredEdgeSet


@dataclass(frozen=True)
class EdgeDistribution:
    """Normalized score-proportional distribution over candidate edges."""

    edges: tuple[tuple[int, int], ...]
    probabilities: np.ndarray

    def __post_init__(self):
        if len(self.edges) != len(self.probabilities):
            raise InvalidArgumentError("edges and probabilities differ in length")
        if np.any(self.probabilities <= 0):
            raise InvalidArgumentError("all probabilities must be > 0")
        if abs(float(self.probabilities.sum()) - 1.0) > 1e-9:
            raise InvalidArgumentError("probabilities must sum to 1 within 1e-9")

    def __len__(self) -> int:
        return len(self.edges)


def build_distribution(scored: ScoredEdgeSet) -> EdgeDistribution:
    """Normalize predictor scores into sampling probabilities (canonical order)."""
    if len(scored) == 0:
        raise EmptyScoredSetError("no scored candidate edges to build a distribution from")
    scores = np.array([s for _, _, s in scored.entries], dtype=np.float64)
    probs = scores / scores.sum()
    # guard against pathological normalization drift
    probs = probs / probs.sum()
    return EdgeDistribution(tuple((u, v) for u, v, _ in scored.entries), probs)


def sample_k(
    d: EdgeDistribution,
    edge_count: int,
    rng: np.random.Generator,
    fixed_k: int | None = None,
) -> set[tuple[int, int]]:
    """Sample a random number of distinct edges from the distribution.

    k is uniform on {1, ..., edge_count} (the input network's edge count)
    unless fixed_k overrides it; min(k, pool size) edges are then drawn
    without replacement with score-proportional inclusion.
    """
    if edge_count < 1:
        raise InvalidArgumentError(f"edge_count must be >= 1, got {edge_count}")
    if fixed_k is not None:
        if fixed_k < 1:
            raise InvalidArgumentError(f"fixed_k must be >= 1, got {fixed_k}")
        k = fixed_k
    else:
        k = int(rng.integers(1, edge_count + 1))
    take = min(k, len(d.edges))
    if take == len(d.edges):
        return set(d.edges)
    keys = rng.standard_exponential(len(d.edges)) / d.probabilities
    chosen = np.argpartition(keys, take)[:take]
    return {d.edges[i] for i in chosen.tolist()}


def impute(g: Graph, edges: set[tuple[int, int]]) -> Graph:
    """New graph with the sampled edges added at weight 1.0."""
    for u, v in edges:
        if g.has_edge(u, v):
            raise InvariantViolationError(f"edge ({u},{v}) already present in the graph")
    out = g._shallow_copy()
    for u, v in edges:
        out._insert(u, v, 1.0)
    return out
