from itertools import combinations

import pytest

from streamcomm import oracle


def test_bfs_path():
    adj = oracle.adjacency([(0, 1), (1, 2)])
    assert oracle.bfs_dist(adj, [0]) == {0: 0, 1: 1, 2: 2}


def test_bfs_saturated():
    adj = oracle.adjacency([(0, 1), (1, 2)])
    assert oracle.bfs_dist(adj, [0, 1, 2]) == {0: 0, 1: 0, 2: 0}


@pytest.fixture
def fig3_graph():
    """C = nodes 0..6 with 16 internal edges and 8 edges leaving to a K_8."""
    internal = list(combinations(range(7), 2))[:16]
    leaving = [(i % 7, 100 + i) for i in range(8)]
    outside = list(combinations(range(100, 108), 2))
    return oracle.adjacency(internal + leaving + outside), set(range(7))


def test_exact_conductance_fig3(fig3_graph):
    adj, c = fig3_graph
    assert oracle.cut_size(adj, c) == 8
    assert oracle.volume(adj, c) == 40
    assert oracle.volume(adj, set(adj) - c) > 40
    assert oracle.exact_conductance(c, adj) == pytest.approx(0.20, abs=1e-12)


def test_exact_conductance_disconnected():
    adj = oracle.adjacency([(0, 1), (2, 3)])
    assert oracle.exact_conductance({0, 1}, adj) == 0.0


def test_exact_conductance_complement(fig3_graph):
    adj, c = fig3_graph
    assert oracle.exact_conductance(c, adj) == oracle.exact_conductance(set(adj) - c, adj)


def test_exact_conductance_bad_sets():
    adj = oracle.adjacency([(0, 1)])
    with pytest.raises(ValueError):
        oracle.exact_conductance(set(), adj)
    with pytest.raises(ValueError):
        oracle.exact_conductance({0, 1}, adj)


def test_dense_k0():
    adj = oracle.adjacency([(0, 1), (1, 2)])
    assert oracle.dense_diffuse(adj, {1}, 0) == {0: 0.0, 1: 1.0, 2: 0.0}


def test_dense_complete_graph_uniform():
    n = 7
    adj = oracle.adjacency(combinations(range(n), 2))
    p = oracle.dense_diffuse(adj, {0}, 60)
    assert max(abs(x - 1 / n) for x in p.values()) < 1e-12


def test_dense_size_guard():
    adj = {v: set() for v in range(oracle.DENSE_LIMIT + 1)}
    with pytest.raises(ValueError):
        oracle.dense_diffuse(adj, {0}, 1)


def test_exhaustive_sweep_full_scan():
    adj = oracle.adjacency([(0, 1), (1, 2), (2, 3)])
    d = {v: len(n) for v, n in adj.items()}
    best = oracle.exhaustive_sweep([0, 1, 2, 3], [0], 10, adj, d)
    assert best == (frozenset({0, 1, 2, 3}), 0.0, 4)


def test_k_hop_induced():
    adj = oracle.adjacency([(0, 1), (1, 2), (2, 3), (0, 2)])
    assert oracle.k_hop_induced(adj, [0], 1) == {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
