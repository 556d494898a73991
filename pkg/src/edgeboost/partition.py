"""Disjoint node partitions with canonical labels.

Community ids are renumbered in order of first appearance by node id,
so two partitions that differ only by a relabeling compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidArgumentError


def _canonical(labels: Iterable[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for lab in labels:
        idx = remap.get(lab)
        if idx is None:
            idx = len(remap)
            remap[lab] = idx
        out.append(idx)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Partition:
    """Assignment of every node (dense ids 0..n-1) to exactly one community."""

    labels: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for lab in self.labels:
            if lab > seen or lab < 0:
                raise InvalidArgumentError(
                    "labels are not canonical; use Partition.from_labels()"
                )
            if lab == seen:
                seen += 1

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Partition":
        """Build a partition from arbitrary hashable labels, canonicalizing them."""
        return cls(_canonical(labels))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def n_communities(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def communities(self) -> list[list[int]]:
        """Members of each community, indexed by community id; members ascending."""
        out: list[list[int]] = [[] for _ in range(self.n_communities)]
        for node, lab in enumerate(self.labels):
            out[lab].append(node)
        return out

    def sizes(self) -> list[int]:
        counts = [0] * self.n_communities
        for lab in self.labels:
            counts[lab] += 1
        return counts

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)
