"""Community detectors and partition quality.

Two detectors ship natively: Louvain-style greedy modularity optimization
(local moves plus graph aggregation) and asynchronous label propagation.
Any callable ``(Graph, seed) -> Partition`` can be plugged in instead, so
unported algorithms can participate via the external subprocess wrapper
in the CLI module.
"""

from __future__ import annotations

import enum
from typing import Callable

from .errors import DetectorConfigError, EdgelessGraphError, InvalidArgumentError
from .graph import Graph
from .partition import Partition
from .rng import make_rng

_GAIN_TOL = 1e-12

DetectorFn = Callable[[Graph, int], Partition]


class DetectorKind(enum.Enum):
    LOUVAIN = "louvain"
    LABEL_PROPAGATION = "label-propagation"

    @classmethod
    def from_name(cls, name: str) -> "DetectorKind":
        aliases = {
            "louvain": cls.LOUVAIN,
            "label-propagation": cls.LABEL_PROPAGATION,
            "label_propagation": cls.LABEL_PROPAGATION,
            "lpa": cls.LABEL_PROPAGATION,
        }
        try:
            return aliases[name.lower()]
        except KeyError:
            raise DetectorConfigError(f"unknown detector: {name!r}") from None


def modularity(g: Graph, p: Partition) -> float:
    """Newman-Girvan modularity of partition p on graph g.

    Q = sum_c [ W_in(c)/W - (deg(c)/(2W))^2 ] with W the total edge weight.
    """
    if len(p) != g.n:
        raise InvalidArgumentError("partition does not cover the graph's nodes")
    if g.m == 0:
        raise EdgelessGraphError("modularity is undefined on an edgeless graph")
    k = p.n_communities
    intra = [0.0] * k
    degsum = [0.0] * k
    labels = p.labels
    for u, v, w in g.edges():
        if labels[u] == labels[v]:
            intra[labels[u]] += w
    for u in range(g.n):
        degsum[labels[u]] += g.strength(u)
    total = sum(w for _, _, w in g.edges())
    return sum(intra[c] / total - (degsum[c] / (2.0 * total)) ** 2 for c in range(k))


# -- Louvain --------------------------------------------------------------


def _local_move(nbrs, self_w, rng):
    """One level of greedy single-node moves; returns canonical labels.

    Node visit order is reshuffled each pass.  A node moves only on a
    strictly positive modularity gain; equal-gain candidates resolve to
    the lowest community id.
    """
    n = len(nbrs)
    strength = [sum(w for _, w in nbrs[u]) + 2.0 * self_w[u] for u in range(n)]
    two_w = sum(strength)
    comm = list(range(n))
    tot = strength[:]

    moved = True
    while moved:
        moved = False
        for u in rng.permutation(n).tolist():
            cu = comm[u]
            ku = strength[u]
            tot[cu] -= ku
            nw: dict[int, float] = {}
            for v, w in nbrs[u]:
                c = comm[v]
                nw[c] = nw.get(c, 0.0) + w
            stay = nw.get(cu, 0.0) - tot[cu] * ku / two_w
            best_c = -1
            best_gain = float("-inf")
            for c, wc in nw.items():
                if c == cu:
                    continue
                gain = wc - tot[c] * ku / two_w
                if gain > best_gain + _GAIN_TOL or (
                    gain > best_gain - _GAIN_TOL and c < best_c
                ):
                    best_c, best_gain = c, gain
            if best_c >= 0 and best_gain > stay + _GAIN_TOL:
                comm[u] = best_c
                tot[best_c] += ku
                moved = True
            else:
                tot[cu] += ku

    remap: dict[int, int] = {}
    for u in range(n):
        c = comm[u]
        idx = remap.get(c)
        if idx is None:
            idx = len(remap)
            remap[c] = idx
        comm[u] = idx
    return comm, len(remap)


def _aggregate(nbrs, self_w, comm, k):
    """Collapse communities into supernodes, summing edge weights."""
    new_self = [0.0] * k
    acc: list[dict[int, float]] = [{} for _ in range(k)]
    for u in range(len(nbrs)):
        cu = comm[u]
        new_self[cu] += self_w[u]
        row = acc[cu]
        for v, w in nbrs[u]:
            cv = comm[v]
            if cv == cu:
                if v > u:
                    new_self[cu] += w
            else:
                row[cv] = row.get(cv, 0.0) + w
    return [list(d.items()) for d in acc], new_self


def louvain(g: Graph, seed: int = 0) -> Partition:
    """Greedy modularity optimization with aggregation, seeded and deterministic."""
    if g.m == 0:
        return Partition.singletons(g.n)
    rng = make_rng(seed)
    nbrs = [list(g.neighbors(u).items()) for u in range(g.n)]
    self_w = [0.0] * g.n
    node_comm = list(range(g.n))
    while True:
        comm, k = _local_move(nbrs, self_w, rng)
        node_comm = [comm[c] for c in node_comm]
        if k == len(nbrs):
            break
        nbrs, self_w = _aggregate(nbrs, self_w, comm, k)
    return Partition.from_labels(node_comm)


# -- Label propagation -----------------------------------------------------


def label_propagation(g: Graph, seed: int = 0, max_sweeps: int = 100) -> Partition:
    """Asynchronous majority-label propagation.

    Stops once every node's label is a weighted majority among its
    neighbors (a node already holding a majority label keeps it; only
    non-majority nodes adopt, ties resolved uniformly at random).  The
    sweep cap guards pathological oscillation.
    """
    labels = list(range(g.n))
    if g.m == 0:
        return Partition.from_labels(labels)
    rng = make_rng(seed)
    for _ in range(max_sweeps):
        changed = False
        for u in rng.permutation(g.n).tolist():
            nbrs = g.neighbors(u)
            if not nbrs:
                continue
            counts: dict[int, float] = {}
            for v, w in nbrs.items():
                lab = labels[v]
                counts[lab] = counts.get(lab, 0.0) + w
            top_w = max(counts.values())
            top = [lab for lab, c in counts.items() if c >= top_w - _GAIN_TOL]
            if labels[u] in top:
                continue
            labels[u] = top[int(rng.integers(len(top)))] if len(top) > 1 else top[0]
            changed = True
        if not changed:
            break
    return Partition.from_labels(labels)


# -- dispatch ---------------------------------------------------------------

_NATIVE: dict[DetectorKind, DetectorFn] = {
    DetectorKind.LOUVAIN: louvain,
    DetectorKind.LABEL_PROPAGATION: label_propagation,
}


def detect(g: Graph, kind: "DetectorKind | DetectorFn", seed: int = 0) -> Partition:
    """Run the selected detector; output is total and canonically labeled."""
    if isinstance(kind, DetectorKind):
        fn = _NATIVE[kind]
    elif callable(kind):
        fn = kind
    else:
        raise DetectorConfigError(f"not a detector: {kind!r}")
    out = fn(g, seed)
    labels = out.labels if isinstance(out, Partition) else out
    p = Partition.from_labels(labels)
    if len(p) != g.n:
        raise DetectorConfigError(
            f"detector returned {len(p)} labels for a {g.n}-node graph"
        )
    return p
