import pytest

from bipratio.generators import complete, cycle, gnp, planted_bipartite
from bipratio.graphio import dumps_graph


def test_cycle_and_complete_shapes():
    c = cycle(5)
    assert c.n == 5 and c.m == 5
    assert all(d == 2 for d in c.deg)
    k = complete(4)
    assert k.m == 6
    assert all(d == 3 for d in k.deg)


def test_cycle_minimum_size():
    with pytest.raises(ValueError):
        cycle(2)


def test_gnp_deterministic():
    a = gnp(12, 0.4, 3, seed=9)
    b = gnp(12, 0.4, 3, seed=9)
    assert a == b
    c = gnp(12, 0.4, 3, seed=10)
    assert dumps_graph(a) != dumps_graph(c)


def test_gnp_no_isolated_by_default():
    G = gnp(20, 0.05, 1, seed=3)
    assert min(G.deg) >= 1


def test_planted_bipartite_accounting():
    G, meta = planted_bipartite(30, 0.3, 0.05, seed=9)
    assert meta["n"] == 30
    assert meta["total_weight"] == G.total_weight
    sides = meta["sides"]
    noise = sum(w for u, v, w in G.edges if sides[u] == sides[v])
    assert noise == meta["noise_weight"]
    assert meta["noise_fraction"] == pytest.approx(noise / G.total_weight)


def test_planted_bipartite_zero_noise_is_bipartite():
    G, meta = planted_bipartite(16, 0.4, 0.0, seed=2)
    sides = meta["sides"]
    assert all(sides[u] != sides[v] for u, v, _ in G.edges)
    assert meta["noise_weight"] == 0
