import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumgraph.constructions import circulant, complete, cycle, gdm
from sumgraph.graph import diameter, regular_degree
from sumgraph.power import edge_growth, edge_count_within, power_graph
from sumgraph.sumsets import ResidueSet, sumset_h

from conftest import connected_graphs, graphs, matrix_power_edges, nx_count_within, random_graph


def test_h1_is_identity():
    g = gdm(3, 3)
    assert power_graph(g, 1) == g


def test_c8_square():
    g2 = power_graph(cycle(8), 2)
    assert g2.m == 16
    assert regular_degree(g2) == 4
    assert g2 == circulant(8, [1, 2])


def test_c5_square_is_complete():
    assert power_graph(cycle(5), 2) == complete(5)


def test_bad_h():
    with pytest.raises(ValueError):
        power_graph(cycle(5), 0)
    with pytest.raises(ValueError):
        edge_growth(cycle(5), 0)


def test_profile_c8():
    rows = [(r.h, r.total, r.excess) for r in edge_growth(cycle(8), 3).rows]
    assert rows == [(1, 8, 0), (2, 16, 8), (3, 24, 16)]


def test_profile_g34():
    # networkx distance counts give 24, 44, 68 for h = 1, 2, 3
    prof = edge_growth(gdm(3, 4), 3)
    assert [(r.h, r.total, r.excess) for r in prof.rows] == [(1, 24, 0), (2, 44, 20), (3, 68, 44)]
    assert prof.to_json()["rows"][1] == {"h": 2, "total": 44, "excess": 20}


def test_disconnected_power_stays_within_components():
    g = circulant(6, [2])  # two triangles
    assert power_graph(g, 5).m == 6


@given(graphs(max_n=12), st.integers(1, 6))
def test_profile_invariants(g, hmax):
    prof = edge_growth(g, hmax)
    totals = [r.total for r in prof.rows]
    assert totals == sorted(totals)
    assert totals[-1] <= g.n * (g.n - 1) // 2
    assert prof.rows[0].excess == 0
    assert all(r.excess == r.total - g.m for r in prof.rows)
    assert totals == [edge_count_within(g, h) for h in range(1, hmax + 1)]


@given(graphs(max_n=12), st.integers(1, 5))
def test_nesting(g, h):
    a, b = power_graph(g, h), power_graph(g, h + 1)
    assert all((a.adj[v] & ~b.adj[v]) == 0 for v in range(g.n))


def test_composition_law():
    rng = random.Random(3)
    for _ in range(25):
        g = random_graph(rng.randint(2, 32), rng.choice([0.05, 0.1, 0.2]), rng)
        for a in range(1, 4):
            for b in range(1, 4):
                assert power_graph(power_graph(g, a), b) == power_graph(g, a * b)


@settings(max_examples=50)
@given(connected_graphs(min_n=2, max_n=12))
def test_saturation(g):
    delta = diameter(g)
    full = g.n * (g.n - 1) // 2
    for h in range(1, delta + 3):
        assert (power_graph(g, h).m == full) == (h >= delta)


def test_matrix_oracle_small_cases():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng.randint(1, 20), 0.15, rng)
        for h in range(1, 5):
            assert set(power_graph(g, h).edges()) == matrix_power_edges(g, h)
            assert power_graph(g, h).m == nx_count_within(g, h)


@settings(max_examples=40)
@given(st.integers(2, 30), st.data())
def test_sumset_sumgraph_commute(n, data):
    members = data.draw(st.sets(st.integers(1, n - 1), min_size=1, max_size=4))
    s = ResidueSet.of(n, members | {0}).symmetrized()
    h = data.draw(st.integers(1, 4))
    lhs = power_graph(circulant(n, s.without_zero()), h)
    hs = sumset_h(s, h).without_zero()
    rhs = circulant(n, hs) if hs.bits else circulant(n, [])
    assert lhs == rhs
