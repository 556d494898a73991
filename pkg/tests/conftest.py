"""Shared fixtures, tiny graph builders, and hypothesis strategies."""

from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

import edgeboost as eb
from edgeboost.fileio import partition_from_pairs, read_edge_list, read_partition

DATA_DIR = Path(__file__).resolve().parents[1] / "data"

# acceptance-criterion verdict lines, replayed after the test summary so
# they are visible without -s (stdout inside passing tests is captured)
VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)


def clique_pair(size: int = 5, bridge: bool = True) -> eb.Graph:
    """Two disjoint cliques on 2*size nodes, optionally joined by one edge."""
    edges = [
        (u, v)
        for start in (0, size)
        for u, v in combinations(range(start, start + size), 2)
    ]
    if bridge:
        edges.append((size - 1, size))
    return eb.Graph.from_edges(2 * size, edges)


def path_graph(n: int) -> eb.Graph:
    return eb.Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture(scope="session")
def karate():
    g, labels = read_edge_list(str(DATA_DIR / "karate.edges"))
    truth = partition_from_pairs(read_partition(str(DATA_DIR / "karate.truth")), labels)
    assert g.n == 34 and g.m == 78
    return g, truth


# -- hypothesis strategies --------------------------------------------------


@st.composite
def graphs(draw, min_nodes=1, max_nodes=10, weighted=False):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = list(combinations(range(n), 2))
    if pairs:
        chosen = draw(
            st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
        )
    else:
        chosen = []
    if weighted:
        weights = draw(
            st.lists(
                st.floats(0.05, 1.0, allow_nan=False),
                min_size=len(chosen),
                max_size=len(chosen),
            )
        )
        return eb.Graph.from_edges(
            n, [(u, v, w) for (u, v), w in zip(chosen, weights)]
        )
    return eb.Graph.from_edges(n, chosen)


@st.composite
def partitions(draw, n=None, min_nodes=1, max_nodes=12):
    if n is None:
        n = draw(st.integers(min_nodes, max_nodes))
    labels = draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    return eb.Partition.from_labels(labels)


@st.composite
def ensembles(draw, max_nodes=9, max_partitions=6):
    """A node count plus a non-empty list of partitions over those nodes."""
    n = draw(st.integers(2, max_nodes))
    k = draw(st.integers(1, max_partitions))
    parts = [
        eb.Partition.from_labels(
            draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
        )
        for _ in range(k)
    ]
    return n, parts
