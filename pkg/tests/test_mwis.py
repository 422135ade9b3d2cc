"""The reduction engine for maximum-weight independent sets, checked against
subset enumeration on random sparse graphs and ladder formulas."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sigmadd.mwis import BLOB_CAP, solve_mwis


def brute_mwis(weights, adj):
    """Independent oracle: enumerate every subset."""
    vs = sorted(weights)
    best = 0
    for r in range(len(vs) + 1):
        for combo in itertools.combinations(vs, r):
            chosen = set(combo)
            if any(u in chosen for v in chosen for u in adj.get(v, ())):
                continue
            best = max(best, sum(weights[v] for v in chosen))
    return best


def check(weights, adj):
    value, sel = solve_mwis(weights, adj)
    assert value == brute_mwis(weights, adj)
    assert sum(weights[v] for v in sel) == value
    for v in sel:
        assert not (adj.get(v, set()) & sel)
    return value


def path_graph(weights_list):
    weights = dict(enumerate(weights_list))
    adj = {i: set() for i in weights}
    for i in range(len(weights_list) - 1):
        adj[i].add(i + 1)
        adj[i + 1].add(i)
    return weights, adj


def ring_graph(weights_list):
    weights, adj = path_graph(weights_list)
    n = len(weights_list)
    if n > 2:
        adj[0].add(n - 1)
        adj[n - 1].add(0)
    return weights, adj


def ladder_graph(ncols, cyclic=False, twisted=False, w=1):
    weights = {}
    adj = {}
    for i in range(ncols):
        for side in (0, 1):
            v = 2 * i + side
            weights[v] = w
            adj[v] = set()

    def link(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for i in range(ncols):
        link(2 * i, 2 * i + 1)
        if i + 1 < ncols:
            link(2 * i, 2 * i + 2)
            link(2 * i + 1, 2 * i + 3)
    if cyclic:
        last = ncols - 1
        if twisted:
            link(2 * last, 1)
            link(2 * last + 1, 0)
        else:
            link(2 * last, 0)
            link(2 * last + 1, 1)
    return weights, adj


def test_empty_and_singleton():
    assert solve_mwis({}, {}) == (0, set())
    assert solve_mwis({7: 3}, {7: set()}) == (3, {7})


@pytest.mark.parametrize("n", range(1, 12))
def test_uniform_paths(n):
    value, _ = solve_mwis(*path_graph([1] * n))
    assert value == (n + 1) // 2


@pytest.mark.parametrize("n", range(3, 12))
def test_uniform_rings(n):
    value, _ = solve_mwis(*ring_graph([1] * n))
    assert value == n // 2


def test_weighted_path_prefers_heavy_interior():
    value, sel = solve_mwis(*path_graph([1, 5, 1]))
    assert value == 5 and sel == {1}


def test_alternating_cycle_path_chain():
    # 1-weight "cycles" joined by half-weight "paths": C-P-C-P-C
    weights, adj = path_graph([2, 1, 2, 1, 2])
    value, _ = solve_mwis(weights, adj)
    assert value == 6


@pytest.mark.parametrize("ncols,cyclic,twisted", [
    (2, False, False), (5, False, False),
    (4, True, False), (5, True, False),
    (4, True, True), (5, True, True),
])
def test_small_ladders_vs_brute(ncols, cyclic, twisted):
    check(*ladder_graph(ncols, cyclic, twisted))


@pytest.mark.parametrize("ncols,twisted,expect", [
    (22, False, 22),  # straight even closure: alternating columns fit
    (21, True, 21),   # twisted odd closure fits too
    (21, False, 20),  # straight odd cannot alternate all the way
    (22, True, 21),   # twisted even loses one column
])
def test_big_cyclic_ladders_hit_frontier_dp(ncols, twisted, expect):
    weights, adj = ladder_graph(ncols, cyclic=True, twisted=twisted)
    assert 2 * ncols > BLOB_CAP  # forces the ladder DP, not the blob brute
    value, sel = solve_mwis(weights, adj)
    assert value == expect
    for v in sel:
        assert not (adj[v] & sel)


def test_open_ladder_with_pendant_lines():
    # a double line with unsaturated lines folding in from both ends
    weights, adj = ladder_graph(6)
    nxt = 100
    for attach in (0, 11):
        prev = attach
        for _ in range(3):
            weights[nxt] = 1
            adj[nxt] = {prev}
            adj[prev].add(nxt)
            prev = nxt
            nxt += 1
    value, sel = solve_mwis(weights, adj)
    assert value == brute_mwis(weights, adj)


@st.composite
def random_graph(draw):
    n = draw(st.integers(min_value=1, max_value=11))
    weights = {i: draw(st.integers(min_value=1, max_value=3)) for i in range(n)}
    adj = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()) and draw(st.integers(0, 2)) == 0:
                adj[i].add(j)
                adj[j].add(i)
    return weights, adj


@given(random_graph())
@settings(max_examples=120, deadline=None)
def test_random_graphs_vs_brute(graph):
    weights, adj = graph
    check(weights, adj)


def test_triangle_weights():
    weights = {0: 1, 1: 2, 2: 1}
    adj = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    value, sel = solve_mwis(weights, adj)
    assert value == 2 and sel == {1}


def test_deterministic_output():
    weights, adj = ladder_graph(4, cyclic=True)
    runs = {frozenset(solve_mwis(dict(weights), {v: set(ns) for v, ns in adj.items()})[1])
            for _ in range(5)}
    assert len(runs) == 1
