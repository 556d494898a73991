"""Text formats for graphs, partitions, and diagnostics.

Edge lists are `u<TAB>v[<TAB>weight]` with `#` comments; partition files
are `node_label<TAB>community_id`.  Node labels are arbitrary strings
mapped to dense integer ids in first-seen order, so writing and
re-reading yields an isomorphic labeled graph.
"""

from __future__ import annotations

import csv
from typing import Iterable, Sequence

from .errors import EdgeFileFormatError, InvalidArgumentError
from .graph import Graph
from .partition import Partition


def _fmt_weight(w: float) -> str:
    return repr(int(w)) if float(w).is_integer() else repr(w)


def read_edge_list(path: str) -> tuple[Graph, list[str]]:
    """Parse an edge-list file; returns the graph and the id -> label table."""
    ids: dict[str, int] = {}
    rows: list[tuple[int, int, float]] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) not in (2, 3):
                raise EdgeFileFormatError(
                    path, line_no, f"expected 2 or 3 fields, got {len(fields)}"
                )
            if fields[0] == fields[1]:
                raise EdgeFileFormatError(
                    path, line_no, f"self-loop on node {fields[0]!r}"
                )
            w = 1.0
            if len(fields) == 3:
                try:
                    w = float(fields[2])
                except ValueError:
                    raise EdgeFileFormatError(
                        path, line_no, f"bad weight {fields[2]!r}"
                    ) from None
                if w <= 0:
                    raise EdgeFileFormatError(
                        path, line_no, f"weight must be > 0, got {fields[2]}"
                    )
            u = ids.setdefault(fields[0], len(ids))
            v = ids.setdefault(fields[1], len(ids))
            rows.append((u, v, w))
    labels = list(ids)
    return Graph.from_edges(len(labels), rows), labels


def write_edge_list(path: str, g: Graph, labels: Sequence[str] | None = None) -> None:
    """Write `u<TAB>v[<TAB>weight]` lines in ascending id order; the weight
    column is omitted when every edge has weight 1."""
    if labels is None:
        labels = [str(u) for u in range(g.n)]
    with open(path, "w", encoding="utf-8") as fh:
        for u, v, w in g.edges():
            if w == 1.0:
                fh.write(f"{labels[u]}\t{labels[v]}\n")
            else:
                fh.write(f"{labels[u]}\t{labels[v]}\t{_fmt_weight(w)}\n")


def read_partition(path: str) -> list[tuple[str, str]]:
    """Parse `node_label<TAB>community_id` lines; duplicates are format errors."""
    pairs: list[tuple[str, str]] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise EdgeFileFormatError(
                    path, line_no, f"expected 2 fields, got {len(fields)}"
                )
            if fields[0] in seen:
                raise EdgeFileFormatError(
                    path, line_no, f"node {fields[0]!r} assigned twice"
                )
            seen.add(fields[0])
            pairs.append((fields[0], fields[1]))
    return pairs


def partition_from_pairs(
    pairs: Iterable[tuple[str, str]], node_labels: Sequence[str]
) -> Partition:
    """Align a label -> community listing with a node-id table."""
    mapping = dict(pairs)
    missing = [lab for lab in node_labels if lab not in mapping]
    if missing:
        raise InvalidArgumentError(f"partition is missing nodes: {missing[:5]}")
    extra = set(mapping) - set(node_labels)
    if extra:
        raise InvalidArgumentError(
            f"partition mentions unknown nodes: {sorted(extra)[:5]}"
        )
    return Partition.from_labels(mapping[lab] for lab in node_labels)


def write_partition(path: str, p: Partition, labels: Sequence[str] | None = None) -> None:
    if labels is None:
        labels = [str(u) for u in range(len(p))]
    with open(path, "w", encoding="utf-8") as fh:
        for u, c in enumerate(p.labels):
            fh.write(f"{labels[u]}\t{c}\n")


def write_per_tau_csv(path: str, per_tau: Iterable) -> None:
    """Dump threshold diagnostics as CSV (tau, n_components, score)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["tau", "n_components", "score"])
        for d in per_tau:
            writer.writerow([repr(d.tau), d.n_components, repr(d.score)])
