from fractions import Fraction

import numpy as np
import pytest

from bipratio import (
    EmptyGraphError,
    GameParams,
    WeightedGraph,
    brute_maxcut,
    cut_value,
    induced_subgraph,
    recursive_bipart,
)
from bipratio.generators import planted_bipartite
from bipratio.verify import random_test_graph


def test_cut_value_examples(k3, c4, k4):
    assert cut_value(c4, {0, 2}) == 1
    assert cut_value(k3, {0}) == Fraction(2, 3)
    assert cut_value(k4, {0, 1}) == Fraction(4, 6)


def test_cut_value_empty_graph():
    with pytest.raises(EmptyGraphError):
        cut_value(WeightedGraph(2, (), (1, 1)), {0})


def test_induced_subgraph_examples(k3):
    sub = induced_subgraph(k3, {0, 1})
    assert sub.graph is not None
    assert sub.graph.edges == ((0, 1, 1),)
    assert sub.ids == (0, 1)
    assert sub.isolated == ()

    empty = induced_subgraph(k3, set())
    assert empty.graph is None and empty.ids == ()

    full = induced_subgraph(k3, {0, 1, 2})
    assert full.graph == k3
    assert full.ids == (0, 1, 2)


def test_induced_subgraph_isolated_split():
    # 0-1 edge plus vertices 2, 3 hanging off 1: restricting to {0, 2, 3}
    # leaves everything isolated.
    G = WeightedGraph(4, ((0, 1, 1), (1, 2, 1), (1, 3, 1)))
    sub = induced_subgraph(G, {0, 2, 3})
    assert sub.graph is None
    assert sub.isolated == (0, 2, 3)


def test_maxcut_k3(k3):
    res = recursive_bipart(k3, GameParams(seed=1))
    assert res.value == Fraction(2, 3) == brute_maxcut(k3)[0]


def test_maxcut_c4(c4):
    res = recursive_bipart(c4, GameParams(seed=1))
    assert res.value == 1


def test_maxcut_bipartite_small_corpus():
    for run in range(8):
        G, _ = planted_bipartite(10 + run, 0.4, 0.0, seed=run)
        res = recursive_bipart(G, GameParams(seed=run))
        assert res.value == 1
        assert all(t.beta == 0 for t in res.trace)


def test_maxcut_empty_graph():
    with pytest.raises(EmptyGraphError):
        recursive_bipart(WeightedGraph(3, (), (1, 1, 1)), GameParams(seed=0))


def test_maxcut_with_isolated_input_vertices():
    G = WeightedGraph(4, ((0, 1, 1),), b=(1, 1, 1, 1))
    res = recursive_bipart(G, GameParams(seed=0))
    assert res.value == 1  # the single edge is cut; isolated vertices free


def test_maxcut_value_matches_returned_side():
    rng = np.random.default_rng(77)
    for run in range(8):
        n = int(rng.integers(4, 11))
        G = random_test_graph(rng, n, w_max=3)
        res = recursive_bipart(G, GameParams(seed=200 + run))
        assert cut_value(G, res.S) == res.value
        assert 0 <= res.value <= 1


def test_maxcut_never_beats_brute():
    rng = np.random.default_rng(78)
    for run in range(6):
        n = int(rng.integers(4, 10))
        G = random_test_graph(rng, n, w_max=2)
        res = recursive_bipart(G, GameParams(seed=300 + run))
        assert res.value <= brute_maxcut(G)[0]


def test_uncut_bound_helper_monotonicity():
    # Sanity of the functions behind the uncut-fraction bound: x * ln(3/x)
    # increases on (0, 1), and x + ln(3 (1 - x) / eta) never exceeds
    # ln(3 / eta), which is what lets per-level losses telescope.
    import math

    xs = [i / 200 for i in range(1, 200)]
    f = [x * math.log(3.0 / x) for x in xs]
    assert all(a < b for a, b in zip(f, f[1:]))
    for eta in (0.5, 0.1, 0.01, 1e-4):
        for x in xs:
            assert x + math.log(3.0 * (1.0 - x) / eta) <= math.log(3.0 / eta) + 1e-12


def test_trace_accounting_fields():
    G, _ = planted_bipartite(12, 0.5, 0.15, seed=4)
    res = recursive_bipart(G, GameParams(seed=5))
    for level in res.trace:
        # The level uncut never exceeds internal + boundary/2 + deeper uncut;
        # recursive_bipart itself asserts the exact identity per level.
        assert level.uncut >= 0
        assert 2 * level.internal_weight + level.boundary_weight \
            == level.beta * level.volume
