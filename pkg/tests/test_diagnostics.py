import random

import networkx as nx
import pytest
from hypothesis import given, settings

from sumgraph.constructions import complete, cycle, gdm, path
from sumgraph.diagnostics import (
    CASE1,
    CASE2,
    DEFAULT_EPS1,
    SATURATED,
    excess_neighbors,
    geodesic_cut,
    v1_membership,
    vertex_decomposition,
)
from sumgraph.graph import GraphError, bfs_distances, build_graph, diameter
from sumgraph.power import edge_growth

from conftest import connected_graphs, graphs, star, to_nx


def test_excess_neighbors_examples():
    assert excess_neighbors(cycle(8), 0) == {2, 6}
    assert excess_neighbors(complete(4), 0) == set()
    assert excess_neighbors(path(4), 0) == {2}
    with pytest.raises(GraphError):
        excess_neighbors(path(4), 4)


def test_v1_examples():
    assert v1_membership(complete(4), 0.1) == {0, 1, 2, 3}
    assert v1_membership(cycle(8), 0.2956) == set()
    # networkx: every vertex of G_{3,4} has 2 or 3 vertices at distance 2
    h = to_nx(gdm(3, 4))
    sizes = {sum(1 for dd in nx.single_source_shortest_path_length(h, v, cutoff=2).values() if dd == 2)
             for v in h}
    assert sizes == {2, 3}
    assert v1_membership(gdm(3, 4), 0.2956) == set()
    assert v1_membership(gdm(3, 4), 0.7) == {v for v in range(16) if len(excess_neighbors(gdm(3, 4), v)) == 2}
    with pytest.raises(ValueError):
        v1_membership(star(4))


def test_default_eps1():
    assert DEFAULT_EPS1 == pytest.approx(0.2956, abs=1e-4)


def test_decomposition_c8():
    dec = vertex_decomposition(cycle(8), 0, 0.2956)
    assert dec.A == {1, 7} and dec.C == {2, 6} and dec.D == {3, 4, 5}
    assert dec.scriptC == {2, 6}
    assert dec.alpha == pytest.approx(0.7044 / 2)
    assert dec.case_tag == CASE1


def test_decomposition_k4():
    dec = vertex_decomposition(complete(4), 0)
    assert dec.A == {1, 2, 3} and not dec.C and not dec.D
    assert dec.case_tag == SATURATED and dec.alpha is None


def test_decomposition_path4_extended():
    with pytest.raises(ValueError):
        vertex_decomposition(path(4), 0, 0.2956)
    dec = vertex_decomposition(path(4), 0, 0.2956, allow_irregular=True)
    assert dec.A == {1} and dec.C == {2} and dec.D == {3}
    assert dec.alpha == pytest.approx(0.7044)
    assert dec.case_tag == CASE2 and dec.extended


def test_decomposition_rejects_disconnected():
    with pytest.raises(GraphError):
        vertex_decomposition(build_graph(4, [(0, 1), (2, 3)]), 0)


@settings(max_examples=60)
@given(connected_graphs(max_n=16))
def test_partition_property(g):
    for v in range(g.n):
        dec = vertex_decomposition(g, v, allow_irregular=True)
        parts = [{v}, dec.A, dec.C, dec.D]
        assert sum(len(p) for p in parts) == g.n
        assert set().union(*parts) == set(range(g.n))
        dist = bfs_distances(g, v)
        assert all(dist[c] == 2 for c in dec.C)
        assert all(dist[x] >= 3 for x in dec.D)
        assert dec.C == excess_neighbors(g, v)
        assert dec.scriptC <= dec.C


@given(graphs(max_n=14))
def test_excess_sum_identity(g):
    total = sum(len(excess_neighbors(g, v)) for v in range(g.n))
    assert total == 2 * edge_growth(g, 2).excess(2)


def test_cut_c8():
    cut = geodesic_cut(cycle(8))
    assert cut.endpoints == (0, 4) and cut.path == (0, 1, 2, 3, 4)
    assert cut.B == {5, 6, 7} and cut.eAB == 2
    assert (cut.lower, cut.upper) == (2, 9)


def test_cut_path5():
    cut = geodesic_cut(path(5))
    assert cut.endpoints == (0, 4) and not cut.B and cut.eAB == 0
    assert (cut.lower, cut.upper) == (-3, 0)


def test_cut_k4():
    cut = geodesic_cut(complete(4))
    assert cut.endpoints == (0, 1) and cut.B == {2, 3} and cut.eAB == 4
    assert (cut.lower, cut.upper) == (4, 6)


def test_cut_rejects():
    with pytest.raises(GraphError):
        geodesic_cut(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        geodesic_cut(build_graph(1, []))


@settings(max_examples=80)
@given(connected_graphs(min_n=2, max_n=16))
def test_cut_bounds_and_chordless(g):
    cut = geodesic_cut(g)
    assert cut.delta == diameter(g)
    assert cut.lower <= cut.eAB <= cut.upper
    on_path = set(cut.path)
    h = to_nx(g).subgraph(on_path)
    assert h.number_of_edges() == len(cut.path) - 1
    assert nx.shortest_path_length(to_nx(g), *cut.endpoints) == cut.delta
