"""Per-vertex shell decompositions and geodesic edge cuts.

These are the graph quantities behind the growth bounds: the distance-2 sets
T_v, the low-excess vertex set V_1, the shells A/C/D around a vertex with the
alpha statistic, and the edge count between a diametral geodesic and the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .checks import _EPS
from .graph import Graph, GraphError, bfs_distances, diameter, is_connected, iter_bits, min_degree, regular_degree

DEFAULT_EPS1 = _EPS.eps1

CASE1 = "CASE1"
CASE2 = "CASE2"
SATURATED = "SATURATED"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def excess_neighbors(g: Graph, v: int) -> set[int]:
    """Vertices at hop distance exactly 2 from v."""
    _check_vertex(g, v)
    ball1 = g.adj[v] | (1 << v)
    reach2 = 0
    for u in iter_bits(g.adj[v]):
        reach2 |= g.adj[u]
    return set(iter_bits(reach2 & ~ball1))


def v1_membership(g: Graph, eps1: float = DEFAULT_EPS1) -> set[int]:
    d = regular_degree(g)
    if d is None:
        raise ValueError("v1_membership needs a regular graph")
    return {v for v in range(g.n) if len(excess_neighbors(g, v)) < eps1 * d}


@dataclass(frozen=True)
class Decomposition:
    v: int
    A: frozenset
    C: frozenset
    D: frozenset
    scriptC: frozenset
    alpha: Optional[float]
    case_tag: str
    d: int
    eps1: float
    extended: bool = False

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "A": sorted(self.A),
            "C": sorted(self.C),
            "D": sorted(self.D),
            "scriptC": sorted(self.scriptC),
            "alpha": self.alpha,
            "case_tag": self.case_tag,
            "d": self.d,
            "eps1": self.eps1,
            "extended": self.extended,
        }


def vertex_decomposition(g: Graph, v: int, eps1: float = DEFAULT_EPS1,
                         allow_irregular: bool = False) -> Decomposition:
    """Split V into {v}, A = N(v), C (distance 2) and D (the rest).

    alpha = (1 - eps1)/d * max |N(c) & A| over c in C with a neighbour in D.
    With ``allow_irregular`` a non-regular graph uses d = min degree and the
    result is marked ``extended``.
    """
    _check_vertex(g, v)
    if not is_connected(g):
        raise GraphError("vertex_decomposition needs a connected graph")
    d = regular_degree(g)
    extended = d is None
    if extended:
        if not allow_irregular:
            raise ValueError("vertex_decomposition needs a regular graph")
        d = min_degree(g)
    a = g.adj[v]
    inner = a | (1 << v)
    reach2 = 0
    for u in iter_bits(a):
        reach2 |= g.adj[u]
    c = reach2 & ~inner
    dd = ((1 << g.n) - 1) & ~(inner | c)
    script_c = [x for x in iter_bits(c) if g.adj[x] & dd]
    if c == 0 or dd == 0:
        alpha = None
        tag = SATURATED
    else:
        best = max((g.adj[x] & a).bit_count() for x in script_c)
        alpha = (1 - eps1) / d * best
        tag = CASE1 if alpha <= 0.5 else CASE2
    return Decomposition(v, frozenset(iter_bits(a)), frozenset(iter_bits(c)),
                         frozenset(iter_bits(dd)), frozenset(script_c), alpha, tag,
                         d, eps1, extended)


@dataclass(frozen=True)
class GeodesicCut:
    endpoints: tuple[int, int]
    path: tuple[int, ...]
    A: frozenset
    B: frozenset
    eAB: int
    lower: int
    upper: int
    d: int = field(default=0)

    @property
    def delta(self) -> int:
        return len(self.path) - 1

    def to_json(self) -> dict:
        return {"endpoints": list(self.endpoints), "path": list(self.path),
                "A": sorted(self.A), "B": sorted(self.B), "eAB": self.eAB,
                "lower": self.lower, "upper": self.upper, "delta": self.delta,
                "d": self.d}


def shortest_path(g: Graph, u: int, w: int) -> list[int]:
    """A shortest u-w path; each step back toward u takes the smallest-index parent."""
    dist = bfs_distances(g, u)
    if not isinstance(dist[w], int):
        raise GraphError(f"no path between {u} and {w}")
    out = [w]
    x = w
    while x != u:
        x = min(y for y in iter_bits(g.adj[x]) if dist[y] == dist[x] - 1)
        out.append(x)
    return out[::-1]


def geodesic_cut(g: Graph) -> GeodesicCut:
    if g.n < 2:
        raise GraphError("geodesic_cut needs at least two vertices")
    if not is_connected(g):
        raise GraphError("geodesic_cut needs a connected graph")
    delta = diameter(g)
    pair = None
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for w in range(u + 1, g.n):
            if dist[w] == delta:
                pair = (u, w)
                break
        if pair:
            break
    p = shortest_path(g, *pair)
    amask = 0
    for x in p:
        amask |= 1 << x
    e_ab = sum((g.adj[x] & ~amask).bit_count() for x in p)
    d = min_degree(g)
    bset = frozenset(x for x in range(g.n) if not (amask >> x) & 1)
    return GeodesicCut(pair, tuple(p), frozenset(p), bset, e_ab,
                       (delta + 1) * (d - 2) + 2, 3 * len(bset), d)
