"""Co-community aggregation: weights, scores, threshold scan, attachment.

select_threshold is checked against a brute-force oracle that re-derives
every pruning through the public graph operations.
"""

import pytest
from hypothesis import given, settings

import edgeboost as eb
from conftest import ensembles
from edgeboost.errors import InvalidArgumentError


def P(*labels):
    return eb.Partition.from_labels(labels)


def gcc_from_weights(n, weighted_pairs, n_partitions):
    g = eb.Graph.from_edges(n, [(u, v, w) for (u, v), w in weighted_pairs.items()])
    return eb.CoCommunityNetwork(g, n_partitions)


# -- build_cocommunity ------------------------------------------------------


def test_cocommunity_counts():
    parts = [P(0, 0, 1), P(0, 0, 0)]
    gcc = eb.build_cocommunity(3, parts)
    assert gcc.graph.weight(0, 1) == 1.0  # together in both
    assert gcc.graph.weight(0, 2) == 0.5  # together in one of two
    assert gcc.n_partitions == 2


def test_cocommunity_never_together_means_no_edge():
    gcc = eb.build_cocommunity(2, [P(0, 1), P(0, 1)])
    assert gcc.graph.m == 0


def test_cocommunity_rejects_mismatched_partitions():
    with pytest.raises(InvalidArgumentError):
        eb.build_cocommunity(3, [P(0, 0, 1), P(0, 0)])
    with pytest.raises(InvalidArgumentError):
        eb.build_cocommunity(3, [])


@given(ensembles())
@settings(max_examples=60)
def test_cocommunity_weights_are_exact_count_ratios(ens):
    n, parts = ens
    gcc = eb.build_cocommunity(n, parts)
    for u, v, w in gcc.graph.edges():
        count = sum(1 for p in parts if p.labels[u] == p.labels[v])
        assert w == count / len(parts)  # exact rational, no drift
        assert count >= 1
    # pairs never co-clustered never get an edge
    for u in range(n):
        for v in range(u + 1, n):
            if all(p.labels[u] != p.labels[v] for p in parts):
                assert not gcc.graph.has_edge(u, v)


# -- per-community and per-partition scores ----------------------------------


def test_consensus_score_full_triangle():
    gcc = gcc_from_weights(3, {(0, 1): 1.0, (0, 2): 1.0, (1, 2): 1.0}, 10)
    assert eb.community_consensus_score(gcc, [0, 1, 2]) == 1.0


def test_consensus_score_half_triangle():
    gcc = gcc_from_weights(3, {(0, 1): 0.5, (0, 2): 0.5, (1, 2): 0.5}, 10)
    assert eb.community_consensus_score(gcc, [0, 1, 2]) == 0.5


def test_consensus_score_missing_pair_counts_zero():
    gcc = gcc_from_weights(3, {(0, 1): 1.0, (0, 2): 1.0}, 10)
    assert eb.community_consensus_score(gcc, [0, 1, 2]) == pytest.approx(2 / 3, abs=1e-12)


def test_consensus_score_rejects_singleton():
    gcc = gcc_from_weights(2, {(0, 1): 1.0}, 10)
    with pytest.raises(InvalidArgumentError):
        eb.community_consensus_score(gcc, [0])


def test_partition_score_one_big_community():
    gcc = gcc_from_weights(3, {(0, 1): 1.0, (0, 2): 1.0, (1, 2): 1.0}, 10)
    assert eb.partition_score(gcc, P(0, 0, 0)) == 1.0


def test_partition_score_all_singletons_is_zero():
    # lone nodes have no pairs to agree on; isolating everyone scores nothing
    gcc = gcc_from_weights(3, {(0, 1): 0.2}, 10)
    assert eb.partition_score(gcc, P(0, 1, 2)) == 0.0


def test_partition_score_charges_for_isolated_nodes():
    # same clique either way, but the pruning that strands node 2 pays for it
    gcc = gcc_from_weights(3, {(0, 1): 1.0}, 10)
    assert eb.partition_score(gcc, P(0, 0, 1)) == pytest.approx(2 / 3, abs=1e-12)
    assert eb.partition_score(gcc, P(0, 0, 0)) == pytest.approx(1 / 3, abs=1e-12)


def test_partition_score_weighted_sum_example():
    """Sizes 6 and 4 with m = 0.9 and 0.5 -> 0.6*0.9 + 0.4*0.5 = 0.74."""
    weights = {}
    for u in range(6):
        for v in range(u + 1, 6):
            weights[(u, v)] = 0.9
    for u in range(6, 10):
        for v in range(u + 1, 10):
            weights[(u, v)] = 0.5
    gcc = gcc_from_weights(10, weights, 10)
    p = P(*([0] * 6 + [1] * 4))
    assert eb.community_consensus_score(gcc, range(6)) == pytest.approx(0.9, abs=1e-12)
    assert eb.community_consensus_score(gcc, range(6, 10)) == pytest.approx(0.5, abs=1e-12)
    assert eb.partition_score(gcc, p) == pytest.approx(0.74, abs=1e-9)


@given(ensembles())
@settings(max_examples=60)
def test_partition_score_bounded(ens):
    n, parts = ens
    gcc = eb.build_cocommunity(n, parts)
    for p in parts:
        assert 0.0 <= eb.partition_score(gcc, p) <= 1.0 + 1e-12


# -- select_threshold --------------------------------------------------------


def brute_force_select(gcc, n):
    """Reference scan through public ops: prune, components, score, argmax."""
    best = None
    per_tau = []
    for level in range(1, n + 1):
        tau = level / n
        pruned = eb.prune_below(gcc.graph, tau)
        p = eb.connected_components(pruned)
        s = eb.partition_score(gcc, p)
        per_tau.append((tau, p.n_communities, s))
        if best is None or s > best[2]:
            best = (tau, p, s)
    return best, per_tau


def assert_matches_oracle(gcc, n):
    (tau, p, s), per_tau = brute_force_select(gcc, n)
    res = eb.select_threshold(gcc, n)
    assert res.chosen_tau == tau
    assert res.final_partition == p
    assert res.score == pytest.approx(s, abs=1e-12)
    assert len(res.per_tau) == n
    for d, (etau, ek, es) in zip(res.per_tau, per_tau):
        assert d.tau == etau
        assert d.n_components == ek
        assert d.score == pytest.approx(es, abs=1e-12)


def test_select_all_weights_one_takes_smallest_tau():
    parts = [P(0, 0, 1, 1)] * 5
    gcc = eb.build_cocommunity(4, parts)
    res = eb.select_threshold(gcc, 5)
    assert res.chosen_tau == 1 / 5
    assert res.final_partition == P(0, 0, 1, 1)
    assert res.score == 1.0


def test_select_two_cliques_with_weak_bridge():
    weights = {}
    for base in (0, 3):
        for u in range(base, base + 3):
            for v in range(u + 1, base + 3):
                weights[(u, v)] = 1.0
    weights[(2, 3)] = 0.2
    gcc = gcc_from_weights(6, weights, 10)
    res = eb.select_threshold(gcc, 10)
    assert res.final_partition == P(0, 0, 0, 1, 1, 1)
    assert res.chosen_tau == pytest.approx(0.3)  # smallest tau that cuts the bridge
    assert res.score == 1.0
    assert_matches_oracle(gcc, 10)


def test_select_monotone_component_counts():
    parts = [P(0, 0, 0, 1, 1), P(0, 0, 1, 1, 1), P(0, 1, 1, 2, 2), P(0, 0, 0, 0, 0)]
    gcc = eb.build_cocommunity(5, parts)
    res = eb.select_threshold(gcc, len(parts))
    ks = [d.n_components for d in res.per_tau]
    assert ks == sorted(ks)
    assert_matches_oracle(gcc, len(parts))


def test_select_score_equals_max_of_per_tau():
    parts = [P(0, 0, 1, 2, 2, 1), P(0, 1, 1, 2, 2, 0), P(0, 0, 1, 1, 2, 2)]
    gcc = eb.build_cocommunity(6, parts)
    res = eb.select_threshold(gcc, 3)
    assert res.score == max(s for _, s in res.per_tau_scores)
    assert_matches_oracle(gcc, 3)


@given(ensembles(max_nodes=9, max_partitions=6))
@settings(max_examples=50, deadline=None)
def test_select_matches_bruteforce_oracle(ens):
    n_nodes, parts = ens
    gcc = eb.build_cocommunity(n_nodes, parts)
    assert_matches_oracle(gcc, len(parts))


@given(ensembles(max_nodes=8, max_partitions=5))
@settings(max_examples=40, deadline=None)
def test_identical_ensembles_return_member(ens):
    n_nodes, parts = ens
    same = [parts[0]] * 4
    gcc = eb.build_cocommunity(n_nodes, same)
    res = eb.select_threshold(gcc, 4)
    assert res.final_partition == parts[0]
    assert res.chosen_tau == 1 / 4
    # full agreement scores 1.0 apart from nodes the member itself isolates
    in_pairs = sum(s for s in parts[0].sizes() if s >= 2)
    assert res.score == in_pairs / n_nodes


# -- attach_singletons --------------------------------------------------------


def test_attach_prefers_higher_mean():
    # communities X = {0,1}, Y = {2,3}; singleton 4 pulled harder toward X
    weights = {(0, 1): 1.0, (2, 3): 1.0, (0, 4): 0.6, (1, 4): 0.6, (2, 4): 0.3, (3, 4): 0.3}
    gcc = gcc_from_weights(5, weights, 10)
    p = P(0, 0, 1, 1, 2)
    out = eb.attach_singletons(gcc, p)
    assert out == P(0, 0, 1, 1, 0)


def test_attach_mean_uses_full_community_size():
    # one strong edge into a big community vs a moderate pair into a small one
    weights = {(0, 1): 1.0, (1, 2): 1.0, (0, 2): 1.0, (3, 4): 1.0, (5, 0): 0.9,
               (5, 3): 0.5, (5, 4): 0.5}
    gcc = gcc_from_weights(6, weights, 10)
    p = P(0, 0, 0, 1, 1, 2)
    # mean into {0,1,2} = 0.9/3 = 0.3; into {3,4} = 1.0/2 = 0.5
    assert eb.attach_singletons(gcc, p) == P(0, 0, 0, 1, 1, 1)


def test_attach_no_gcc_edges_stays_singleton():
    gcc = gcc_from_weights(4, {(0, 1): 1.0}, 10)
    p = P(0, 0, 1, 2)
    assert eb.attach_singletons(gcc, p) == p


def test_attach_tie_goes_to_lowest_community_id():
    weights = {(0, 1): 1.0, (2, 3): 1.0, (0, 4): 0.4, (1, 4): 0.4, (2, 4): 0.4, (3, 4): 0.4}
    gcc = gcc_from_weights(5, weights, 10)
    out = eb.attach_singletons(gcc, P(0, 0, 1, 1, 2))
    assert out == P(0, 0, 1, 1, 0)


def test_attach_without_singletons_is_identity():
    gcc = gcc_from_weights(4, {(0, 1): 1.0, (2, 3): 1.0}, 10)
    p = P(0, 0, 1, 1)
    assert eb.attach_singletons(gcc, p) == p


def test_attach_all_singletons_unchanged():
    gcc = gcc_from_weights(3, {(0, 1): 0.5, (1, 2): 0.5}, 10)
    p = P(0, 1, 2)
    assert eb.attach_singletons(gcc, p) == p


def test_attach_is_simultaneous_against_input_partition():
    # singletons 2 and 5: 2 joins {0,1}; 5 must not see 2 as already inside
    weights = {(0, 1): 1.0, (3, 4): 1.0, (0, 2): 0.3, (1, 2): 0.3,
               (2, 5): 1.0, (3, 5): 0.2, (4, 5): 0.2}
    gcc = gcc_from_weights(6, weights, 10)
    out = eb.attach_singletons(gcc, P(0, 0, 1, 2, 2, 3))
    # simultaneous means: 5's pull toward {0,1} is 0, toward {3,4} is 0.2
    assert out == P(0, 0, 0, 1, 1, 1)


@given(ensembles(max_nodes=9, max_partitions=5))
@settings(max_examples=60)
def test_attach_moves_only_singletons(ens):
    n_nodes, parts = ens
    gcc = eb.build_cocommunity(n_nodes, parts)
    before = eb.select_threshold(gcc, len(parts)).final_partition
    after = eb.attach_singletons(gcc, before)
    sizes = before.sizes()
    singles = {u for u in range(n_nodes) if sizes[before.labels[u]] == 1}
    cores = [set(c) for c in before.communities() if len(c) > 1]
    for comm in map(set, after.communities()):
        non_single = comm - singles
        if non_single:
            assert non_single in cores  # each core survives intact, plus adoptees
        else:
            assert len(comm) == 1  # an unattached singleton stays alone
    assert after.n_communities <= before.n_communities
