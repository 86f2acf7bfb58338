import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from sumgraph.constructions import complete, cycle, path
from sumgraph.graph import Graph, build_graph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---------------------------------------------------------------- oracles

def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def matrix_power_edges(g: Graph, h: int) -> set:
    """Edges of the h-th power from (A + I)^h, nonzero off-diagonal entries."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    a += np.eye(g.n, dtype=np.int64)
    p = np.eye(g.n, dtype=np.int64)
    for _ in range(h):
        p = np.minimum(p @ a, 1)
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if p[u, v]}


def nx_count_within(g: Graph, h: int) -> int:
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g), cutoff=h))
    return sum(1 for u in lengths for v, dd in lengths[u].items() if u < v and dd >= 1)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                           if rng.random() < p])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def star(n: int) -> Graph:
    return build_graph(n, [(0, i) for i in range(1, n)])


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=12):
    # a random spanning tree plus random extra edges
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n, unique=True))
        edges.update(extra)
    return build_graph(n, sorted(edges))


@pytest.fixture
def c8():
    return cycle(8)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def p5():
    return path(5)
