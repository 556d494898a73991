"""Ensemble aggregation via the co-community network.

The ensemble of partitions is summarized as a weighted graph whose edge
weights are co-membership frequencies (multiples of 1/n for an ensemble
of n partitions).  Candidate thresholds tau in {1/n, ..., n/n} prune the
network; connected components of each pruning are scored by the
size-weighted mean of per-community consensus, and the best-scoring
threshold wins (ties to the smallest tau).  Stray singletons are then
re-attached to the community they co-occur with most.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgumentError
from .graph import Graph, UnionFind
from .partition import Partition


@dataclass(frozen=True)
class CoCommunityNetwork:
    """Weighted graph of co-membership frequencies across an ensemble."""

    graph: Graph
    n_partitions: int


@dataclass(frozen=True)
class ThresholdDiagnostic:
    tau: float
    n_components: int
    score: float


@dataclass(frozen=True)
class ConsensusResult:
    """Outcome of threshold selection (and, downstream, the full pipeline)."""

    final_partition: Partition
    chosen_tau: float
    score: float
    per_tau: tuple[ThresholdDiagnostic, ...]
    ensemble_size: int
    ensemble_community_counts: tuple[int, ...] = ()
    imputation_degraded: bool = False

    @property
    def per_tau_scores(self) -> tuple[tuple[float, float], ...]:
        return tuple((d.tau, d.score) for d in self.per_tau)


def build_cocommunity(node_count: int, partitions: Sequence[Partition]) -> CoCommunityNetwork:
    """Count co-memberships over the ensemble and normalize by its size."""
    if not partitions:
        raise InvalidArgumentError("need at least one partition")
    for p in partitions:
        if len(p) != node_count:
            raise InvalidArgumentError(
                f"partition covers {len(p)} nodes, expected {node_count}"
            )
    n = len(partitions)
    counts: Counter = Counter()
    for p in partitions:
        for members in p.communities():
            counts.update(combinations(members, 2))
    g = Graph.from_edges(node_count, ((u, v, c / n) for (u, v), c in counts.items()))
    return CoCommunityNetwork(g, n)


def community_consensus_score(gcc: CoCommunityNetwork, community: Iterable[int]) -> float:
    """Mean pairwise co-community weight inside a community (absent pairs count 0)."""
    members = sorted(set(community))
    s = len(members)
    if s < 2:
        raise InvalidArgumentError("consensus score needs a community of size >= 2")
    total = 0.0
    for u, v in combinations(members, 2):
        total += gcc.graph.weight(u, v)
    return total / (s * (s - 1) / 2)


def partition_score(gcc: CoCommunityNetwork, p: Partition) -> float:
    """Size-weighted mean of per-community consensus; singletons contribute 0.

    A lone node has no pairs to agree on, so it adds nothing to the sum
    while still counting toward the denominator.  Isolating a node
    therefore costs its share of the score, which is what lets the
    threshold scan trade purity against coverage instead of collapsing
    onto the strictest pruning (weight-1.0 co-membership is transitive,
    so full-agreement components are exact cliques and any scheme that
    scores singletons 1 rates every pruning at tau = 1 a perfect 1.0).
    """
    n_nodes = gcc.graph.n
    if len(p) != n_nodes:
        raise InvalidArgumentError("partition does not cover the co-community network")
    k = p.n_communities
    intra = [0.0] * k
    labels = p.labels
    for u, v, w in gcc.graph.edges():
        if labels[u] == labels[v]:
            intra[labels[u]] += w
    sizes = p.sizes()
    # Single division at the end keeps a full-agreement partition at exactly 1.0,
    # which the threshold scan's tie-breaking depends on.
    total = 0.0
    for c in range(k):
        s = sizes[c]
        if s >= 2:
            total += s * (intra[c] / (s * (s - 1) / 2))
    return total / n_nodes


def _score_labels(labels: np.ndarray, us, vs, ws, n_nodes: int) -> tuple[float, int]:
    """Vectorized partition score for a label array (same formula as partition_score)."""
    sizes = np.bincount(labels)
    k = len(sizes)
    if len(us):
        lu = labels[us]
        lv = labels[vs]
        internal = lu == lv
        intra = np.bincount(lu[internal], weights=ws[internal], minlength=k)
    else:
        intra = np.zeros(k)
    pairs = sizes * (sizes - 1) / 2.0
    m = np.zeros(k)
    multi = sizes >= 2
    m[multi] = intra[multi] / pairs[multi]
    return float((sizes * m).sum() / n_nodes), k


def select_threshold(gcc: CoCommunityNetwork, n_iterations: int) -> ConsensusResult:
    """Scan tau in {1/n, ..., n/n}, scoring the components of each pruning.

    Weights are exact multiples of 1/n, so prunings are computed on
    integer co-membership counts.  Components are grown incrementally
    from the strictest threshold down (adding edges only merges
    components), and thresholds that prune identical edge sets are
    evaluated once.  Returns the argmax partition; ties break toward the
    smallest tau.
    """
    n = n_iterations
    g = gcc.graph
    if n < 1:
        raise InvalidArgumentError("n_iterations must be >= 1")
    edge_list = list(g.edges())
    us = np.array([e[0] for e in edge_list], dtype=np.intp)
    vs = np.array([e[1] for e in edge_list], dtype=np.intp)
    ws = np.array([e[2] for e in edge_list], dtype=np.float64)
    counts = np.rint(ws * n).astype(np.int64)

    by_count: dict[int, list[int]] = {}
    for i, c in enumerate(counts.tolist()):
        by_count.setdefault(c, []).append(i)

    uf = UnionFind(g.n)
    snapshots: dict[int, tuple[np.ndarray, float, int]] = {}
    prev: tuple[np.ndarray, float, int] | None = None
    for level in range(n, 0, -1):
        fresh = by_count.get(level, ())
        for i in fresh:
            uf.union(int(us[i]), int(vs[i]))
        if fresh or prev is None:
            roots = np.fromiter((uf.find(u) for u in range(g.n)), dtype=np.intp, count=g.n)
            labels = np.unique(roots, return_inverse=True)[1]
            score, k = _score_labels(labels, us, vs, ws, g.n)
            prev = (labels, score, k)
        snapshots[level] = prev

    diagnostics = []
    best_level = None
    best_score = float("-inf")
    for level in range(1, n + 1):
        labels, score, k = snapshots[level]
        diagnostics.append(ThresholdDiagnostic(level / n, k, score))
        if score > best_score:
            best_score = score
            best_level = level

    best_labels = snapshots[best_level][0]
    return ConsensusResult(
        final_partition=Partition.from_labels(best_labels.tolist()),
        chosen_tau=best_level / n,
        score=best_score,
        per_tau=tuple(diagnostics),
        ensemble_size=n,
    )


def attach_singletons(gcc: CoCommunityNetwork, p: Partition) -> Partition:
    """Re-attach stray singletons to the community with the highest mean weight.

    Means are taken over all members of a candidate community in the
    un-pruned co-community network (absent edges count 0); only
    non-singleton communities are candidates, ties go to the lowest
    community id, and nodes without any co-community edge stay put.
    All reassignments are computed against the input partition.
    """
    sizes = p.sizes()
    non_singleton = [c for c, s in enumerate(sizes) if s >= 2]
    if not non_singleton:
        return p
    labels = list(p.labels)
    for u in range(len(labels)):
        if sizes[p.labels[u]] != 1:
            continue
        nbrs = gcc.graph.neighbors(u)
        if not nbrs:
            continue
        sums: dict[int, float] = {}
        for v, w in nbrs.items():
            c = p.labels[v]
            sums[c] = sums.get(c, 0.0) + w
        best_c = non_singleton[0]
        best_mean = sums.get(best_c, 0.0) / sizes[best_c]
        for c in non_singleton[1:]:
            mean = sums.get(c, 0.0) / sizes[c]
            if mean > best_mean:
                best_c, best_mean = c, mean
        labels[u] = best_c
    return Partition.from_labels(labels)
