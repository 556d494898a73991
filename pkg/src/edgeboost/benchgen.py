"""Planted-partition benchmark networks with power-law structure.

Generates LFR-style graphs: degrees and community sizes are drawn from
truncated power laws, nodes are assigned so that their intra-community
degree fits the community, and stubs are wired by seeded
configuration-model matching (leftover stubs are placed by
degree-preserving edge splits rather than dropped).  This is a
generator in the LFR family, not a port of the original tool; quality
is judged by measured mixing and degree statistics.  `perturb` applies
the uniform edge deletion that models incomplete observation.

Exponents are interpreted as p(x) proportional to x**exponent on the
truncated support, so the conventional LFR settings are -2 (degrees)
and -1 (community sizes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GenerationInfeasibleError, InvalidArgumentError
from .graph import DeletionSpec, Graph, delete_edges_random
from .partition import Partition
from .rng import make_rng

_MIXING_TOL = 0.05
_MAX_ATTEMPTS = 20
_MATCH_ROUNDS = 80
_REPAIR_TRIES = 60
_SIZE_DRAW_CAP = 100_000


@dataclass(frozen=True, kw_only=True)
class BenchmarkSpec:
    """Generator parameters; defaults follow the usual 1000-node setup."""

    n_nodes: int = 1000
    avg_degree: float = 10.0
    max_degree: int = 50
    degree_exponent: float = -2.0
    community_exponent: float = -1.0
    min_community: int = 10
    max_community: int = 50
    mu: float = 0.2
    delta: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.mu <= 1.0:
            raise InvalidArgumentError(f"mu must be in [0, 1], got {self.mu}")
        if not 0.0 <= self.delta <= 1.0:
            raise InvalidArgumentError(f"delta must be in [0, 1], got {self.delta}")
        if not 1 <= self.min_community <= self.max_community <= self.n_nodes:
            raise InvalidArgumentError(
                "need 1 <= min_community <= max_community <= n_nodes"
            )
        if not 1 <= self.avg_degree <= self.max_degree:
            raise InvalidArgumentError("need 1 <= avg_degree <= max_degree")


@dataclass(frozen=True)
class PlantedNetwork:
    graph: Graph
    truth: Partition


class _AttemptFailed(Exception):
    """One generation attempt hit a dead end; caller reseeds and retries."""


def _plaw_cdf(x: float, a: float, b: float, exponent: float) -> float:
    if exponent == -1.0:
        return math.log(x / a) / math.log(b / a)
    p = exponent + 1.0
    return (x**p - a**p) / (b**p - a**p)


def _plaw_samples(rng, size: int, a: float, b: float, exponent: float) -> np.ndarray:
    """Inverse-CDF draws from density ~ x**exponent truncated to [a, b)."""
    u = rng.random(size)
    if exponent == -1.0:
        return a * (b / a) ** u
    p = exponent + 1.0
    return (a**p + u * (b**p - a**p)) ** (1.0 / p)


def _mean_floor(a: float, b: float, exponent: float) -> float:
    """E[floor(X)] for the truncated power law; used to calibrate the cutoff."""
    total = 0.0
    d = int(math.floor(a))
    while d < b:
        lo = max(float(d), a)
        hi = min(float(d + 1), b)
        if hi > lo:
            total += d * (_plaw_cdf(hi, a, b, exponent) - _plaw_cdf(lo, a, b, exponent))
        d += 1
    return total


def _degree_sequence(spec: BenchmarkSpec, rng) -> list[int]:
    b = float(spec.max_degree + 1)
    lo, hi = 1.0, float(spec.max_degree)
    if _mean_floor(lo, b, spec.degree_exponent) > spec.avg_degree:
        raise GenerationInfeasibleError(
            f"avg_degree {spec.avg_degree} below the minimum reachable with "
            f"exponent {spec.degree_exponent} and max_degree {spec.max_degree}"
        )
    for _ in range(100):
        mid = (lo + hi) / 2
        if _mean_floor(mid, b, spec.degree_exponent) < spec.avg_degree:
            lo = mid
        else:
            hi = mid
    xmin = (lo + hi) / 2
    degrees = np.floor(
        _plaw_samples(rng, spec.n_nodes, xmin, b, spec.degree_exponent)
    ).astype(int)
    degrees = np.minimum(degrees, spec.max_degree).tolist()
    if sum(degrees) % 2:
        for u in range(len(degrees)):
            if degrees[u] < spec.max_degree:
                degrees[u] += 1
                break
        else:
            degrees[0] -= 1
    return degrees


def _community_sizes(spec: BenchmarkSpec, rng) -> list[int]:
    a, b = float(spec.min_community), float(spec.max_community + 1)
    sizes: list[int] = []
    for _ in range(_SIZE_DRAW_CAP):
        while sum(sizes) < spec.n_nodes:
            draw = int(_plaw_samples(rng, 1, a, b, spec.community_exponent)[0])
            sizes.append(min(draw, spec.max_community))
        if sum(sizes) == spec.n_nodes:
            return sizes
        # Overshot: the remainder replaces the last draw when legal,
        # otherwise shrink and regrow.
        deficit = spec.n_nodes - (sum(sizes) - sizes[-1])
        if spec.min_community <= deficit:
            sizes[-1] = deficit
            return sizes
        sizes.pop()
        if sizes:
            sizes.pop()
    raise GenerationInfeasibleError("could not fit community sizes to n_nodes")


def _assign_communities(
    degrees: list[int], sizes: list[int], mu: float, rng
) -> tuple[list[int], list[int]]:
    """Place nodes so intra-degree fits community size; returns (community, intra)."""
    intra = [min(round((1.0 - mu) * d), d) for d in degrees]
    order = sorted(range(len(degrees)), key=lambda u: (-intra[u], u))
    remaining = list(sizes)
    comm_of = [-1] * len(degrees)
    for u in order:
        eligible = [
            c
            for c in range(len(sizes))
            if remaining[c] > 0 and sizes[c] - 1 >= intra[u]
        ]
        if not eligible:
            raise _AttemptFailed(f"no community can host intra-degree {intra[u]}")
        c = eligible[int(rng.integers(len(eligible)))]
        comm_of[u] = c
        remaining[c] -= 1
    return comm_of, intra


def _match_stubs(stubs: list[int], rng, edges: set, ok) -> int:
    """Randomly pair stubs into new simple edges; returns count of dropped stubs.

    Stubs that keep colliding (duplicate edge, self-loop, constraint) are
    resolved by degree-preserving splits: an edge (x, y) already created in
    this call becomes (u, x) + (v, y), consuming the stubs of u and v while
    leaving every other degree unchanged.  Only when no legal split exists
    are stubs dropped, so the realized degree sequence tracks the drawn one.
    """
    remaining = stubs
    created: list[tuple[int, int]] = []
    for _ in range(_MATCH_ROUNDS):
        if not remaining:
            return 0
        perm = rng.permutation(len(remaining))
        arr = [remaining[i] for i in perm]
        leftover = []
        for j in range(0, len(arr) - 1, 2):
            u, v = arr[j], arr[j + 1]
            if u != v:
                e = (u, v) if u < v else (v, u)
                if e not in edges and ok(u, v):
                    edges.add(e)
                    created.append(e)
                    continue
            leftover.append(u)
            leftover.append(v)
        if len(arr) % 2:
            leftover.append(arr[-1])
        remaining = leftover
    return _split_repair(remaining, rng, edges, created, ok)


def _split_repair(stubs: list[int], rng, edges: set, created: list, ok) -> int:
    """Place leftover stub pairs by splitting edges created in this call."""
    dropped = 0
    perm = rng.permutation(len(stubs))
    ordered = [stubs[i] for i in perm]
    for j in range(0, len(ordered) - 1, 2):
        u, v = ordered[j], ordered[j + 1]
        placed = False
        tries = _REPAIR_TRIES if created else 0
        for _ in range(tries):
            idx = int(rng.integers(len(created)))
            x, y = created[idx]
            for a, b in ((x, y), (y, x)):
                e1 = (u, a) if u < a else (a, u)
                e2 = (v, b) if v < b else (b, v)
                if (
                    u != a
                    and v != b
                    and e1 != e2
                    and e1 not in edges
                    and e2 not in edges
                    and ok(u, a)
                    and ok(v, b)
                ):
                    edges.remove((x, y))
                    edges.add(e1)
                    edges.add(e2)
                    created[idx] = e1
                    created.append(e2)
                    placed = True
                    break
            if placed:
                break
        if not placed:
            dropped += 2
    dropped += len(ordered) % 2
    return dropped


def _wire(
    n: int, comm_of: list[int], intra: list[int], degrees: list[int], rng
) -> Graph:
    k = max(comm_of) + 1
    members: list[list[int]] = [[] for _ in range(k)]
    for u, c in enumerate(comm_of):
        members[c].append(u)

    intra_local = list(intra)
    for c in range(k):
        if sum(intra_local[u] for u in members[c]) % 2:
            # Convert one intra stub to inter to fix parity; take it from
            # the member with the most to spare.
            pick = max(members[c], key=lambda u: (intra_local[u], -u))
            intra_local[pick] -= 1

    edges: set[tuple[int, int]] = set()
    for c in range(k):
        stubs = [u for u in members[c] for _ in range(intra_local[u])]
        _match_stubs(stubs, rng, edges, lambda u, v: True)

    inter_stubs = [u for u in range(n) for _ in range(degrees[u] - intra_local[u])]
    _match_stubs(inter_stubs, rng, edges, lambda u, v: comm_of[u] != comm_of[v])

    if not edges:
        raise _AttemptFailed("wiring produced no edges")
    return Graph.from_edges(n, sorted(edges))


def _generate_once(spec: BenchmarkSpec, rng) -> PlantedNetwork:
    degrees = _degree_sequence(spec, rng)
    sizes = _community_sizes(spec, rng)
    comm_of, intra = _assign_communities(degrees, sizes, spec.mu, rng)
    g = _wire(spec.n_nodes, comm_of, intra, degrees, rng)
    return PlantedNetwork(g, Partition.from_labels(comm_of))


def measured_mixing(g: Graph, truth: Partition) -> float:
    """Fraction of edges whose endpoints lie in different truth communities."""
    if g.m == 0:
        return 0.0
    labels = truth.labels
    inter = sum(1 for u, v, _ in g.edges() if labels[u] != labels[v])
    return inter / g.m


def generate(spec: BenchmarkSpec) -> PlantedNetwork:
    """Build a planted-partition network whose measured mixing is within
    0.05 of the requested mu; reseeds and retries internally, raising
    GenerationInfeasibleError once the retry budget is spent."""
    if (1.0 - spec.mu) * spec.max_degree > spec.max_community:
        raise GenerationInfeasibleError(
            f"(1 - mu) * max_degree = {(1.0 - spec.mu) * spec.max_degree:.1f} "
            f"exceeds max_community = {spec.max_community}"
        )
    reason = "exhausted attempts"
    for attempt in range(_MAX_ATTEMPTS):
        rng = make_rng(spec.seed, attempt)
        try:
            net = _generate_once(spec, rng)
        except _AttemptFailed as exc:
            reason = str(exc)
            continue
        mix = measured_mixing(net.graph, net.truth)
        if abs(mix - spec.mu) <= _MIXING_TOL:
            return net
        reason = f"measured mixing {mix:.3f} not within {_MIXING_TOL} of mu={spec.mu}"
    raise GenerationInfeasibleError(f"generation failed after {_MAX_ATTEMPTS} attempts: {reason}")


def perturb(net: PlantedNetwork, delta: float, seed: int) -> PlantedNetwork:
    """Uniformly delete a delta fraction of edges; the truth is untouched."""
    g = delete_edges_random(net.graph, DeletionSpec(delta=delta, seed=seed))
    return PlantedNetwork(g, net.truth)
