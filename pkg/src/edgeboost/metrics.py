"""Partition comparison measures: NMI and relative error in community count."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import InvalidArgumentError
from .partition import Partition


@dataclass(frozen=True)
class EvalReport:
    nmi: float
    relative_error: float
    n_inferred: int
    n_truth: int


def nmi(p: Partition, q: Partition) -> float:
    """Normalized mutual information, 2*I / (H(p) + H(q)), natural logs.

    Both partitions must cover the same nodes.  When both entropies are
    zero (single-community partitions carry no information) the value is
    1 for equal partitions and 0 otherwise, by convention.
    """
    if len(p) == 0 or len(p) != len(q):
        raise InvalidArgumentError(
            f"partitions cover {len(p)} and {len(q)} nodes; need the same non-empty set"
        )
    if p.labels == q.labels:
        return 1.0
    n = len(p)
    pc = Counter(p.labels)
    qc = Counter(q.labels)
    h1 = -sum((c / n) * math.log(c / n) for c in pc.values())
    h2 = -sum((c / n) * math.log(c / n) for c in qc.values())
    if h1 + h2 == 0.0:
        return 0.0
    joint = Counter(zip(p.labels, q.labels))
    info = sum(
        (nij / n) * math.log(n * nij / (pc[a] * qc[b]))
        for (a, b), nij in joint.items()
    )
    return min(max(2.0 * info / (h1 + h2), 0.0), 1.0)


def relative_error(p: Partition, truth: Partition) -> float:
    """(C - C*) / C*: negative = too few communities, positive = too many."""
    if truth.n_communities < 1:
        raise InvalidArgumentError("truth partition has no communities")
    return (p.n_communities - truth.n_communities) / truth.n_communities


def evaluate(p: Partition, truth: Partition) -> EvalReport:
    return EvalReport(
        nmi=nmi(p, truth),
        relative_error=relative_error(p, truth),
        n_inferred=p.n_communities,
        n_truth=truth.n_communities,
    )
