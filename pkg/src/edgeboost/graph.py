"""Undirected simple graphs with optional positive edge weights.

Graphs are immutable from the caller's perspective: every operation that
changes the edge set returns a new graph, leaving the original intact for
the ensemble loop.  Node ids are dense integers in [0, node_count).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidArgumentError
from .partition import Partition
from .rng import make_rng

EdgeTriple = tuple[int, int, float]


class Graph:
    __slots__ = ("n", "_adj", "_m")

    def __init__(self, node_count: int):
        if node_count < 0:
            raise InvalidArgumentError(f"node_count must be >= 0, got {node_count}")
        self.n = node_count
        self._adj: list[dict[int, float]] = [{} for _ in range(node_count)]
        self._m = 0

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable) -> "Graph":
        """Bulk constructor; edges are (u, v) or (u, v, weight) tuples."""
        g = cls(node_count)
        for e in edges:
            if len(e) == 2:
                u, v = e
                w = 1.0
            else:
                u, v, w = e
            g._insert(u, v, w)
        return g

    def _insert(self, u: int, v: int, w: float = 1.0) -> None:
        # private: only used while a graph is still under construction
        if u == v:
            raise InvalidArgumentError(f"self-loop ({u},{u}) not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidArgumentError(f"edge ({u},{v}) out of range for n={self.n}")
        if w <= 0:
            raise InvalidArgumentError(f"edge weight must be > 0, got {w}")
        if v not in self._adj[u]:
            self._m += 1
        self._adj[u][v] = w
        self._adj[v][u] = w

    def _shallow_copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g._adj = [dict(nbrs) for nbrs in self._adj]
        g._m = self._m
        return g

    def add_edge(self, u: int, v: int, w: float = 1.0) -> "Graph":
        """Return a copy with edge (u, v) present at weight w.

        Re-adding an existing edge overwrites its weight.
        """
        g = self._shallow_copy()
        g._insert(u, v, w)
        return g

    # -- queries ------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def weight(self, u: int, v: int, default: float = 0.0) -> float:
        return self._adj[u].get(v, default)

    def neighbors(self, u: int) -> dict[int, float]:
        """Adjacency map of u (treat as read-only)."""
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def strength(self, u: int) -> float:
        """Weighted degree."""
        return sum(self._adj[u].values())

    def edges(self) -> Iterator[EdgeTriple]:
        """Edges as (u, v, w) with u < v, in ascending (u, v) order."""
        for u in range(self.n):
            adj_u = self._adj[u]
            for v in sorted(adj_u):
                if v > u:
                    yield (u, v, adj_u[v])

    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


@dataclass(frozen=True)
class DeletionSpec:
    """Uniform random edge deletion: remove round(delta * |E|) edges."""

    delta: float
    seed: int = 0

    def __post_init__(self):
        if not (0.0 <= self.delta <= 1.0):
            raise InvalidArgumentError(f"delta must be in [0, 1], got {self.delta}")


def delete_edges_random(g: Graph, spec: DeletionSpec) -> Graph:
    """Copy of g with round(delta * |E|) uniformly chosen edges removed.

    The node set is unchanged; rounding is round-half-to-even so the
    surviving edge count is a deterministic function of delta and |E|.
    """
    edges = list(g.edges())
    n_remove = round(spec.delta * len(edges))
    if n_remove == 0:
        return g._shallow_copy()
    rng = make_rng(spec.seed)
    doomed = set(rng.choice(len(edges), size=n_remove, replace=False).tolist())
    return Graph.from_edges(g.n, (e for i, e in enumerate(edges) if i not in doomed))


class UnionFind:
    """Disjoint-set forest with path compression and union by size."""

    __slots__ = ("parent", "size", "n_components")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.n_components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.n_components -= 1
        return True


def connected_components(g: Graph) -> Partition:
    """Partition of the nodes into connected components."""
    uf = UnionFind(g.n)
    for u in range(g.n):
        for v in g.neighbors(u):
            if v > u:
                uf.union(u, v)
    return Partition.from_labels(uf.find(u) for u in range(g.n))


def prune_below(g: Graph, tau: float) -> Graph:
    """Copy of g retaining exactly the edges with weight >= tau."""
    return Graph.from_edges(g.n, ((u, v, w) for u, v, w in g.edges() if w >= tau))
