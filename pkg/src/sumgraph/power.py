"""h-fold sumgraphs (graph powers) and their edge-growth profiles."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, balls


@dataclass(frozen=True)
class ProfileRow:
    h: int
    total: int
    excess: int


@dataclass(frozen=True)
class PowerProfile:
    n: int
    base_edges: int
    rows: tuple[ProfileRow, ...]

    def total(self, h: int) -> int:
        return self.rows[h - 1].total

    def excess(self, h: int) -> int:
        return self.rows[h - 1].excess

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "base_edges": self.base_edges,
            "rows": [{"h": r.h, "total": r.total, "excess": r.excess} for r in self.rows],
        }


def _check_h(h: int, name: str = "h") -> None:
    if not isinstance(h, int) or h < 1:
        raise ValueError(f"{name} must be a positive integer, got {h!r}")


def power_graph(g: Graph, h: int) -> Graph:
    """The graph joining every pair at hop distance between 1 and ``h`` in ``g``.

    h beyond the diameter saturates to the complete graph on each component.
    """
    _check_h(h)
    if h == 1:
        return g
    rows = [b & ~(1 << v) for v, b in enumerate(balls(g, h))]
    return Graph.from_rows(rows)


def edge_count_within(g: Graph, h: int) -> int:
    """|hE|: number of vertex pairs at distance 1..h."""
    _check_h(h)
    if h == 1:
        return g.m
    return (sum(b.bit_count() for b in balls(g, h)) - g.n) // 2


def edge_growth(g: Graph, hmax: int) -> PowerProfile:
    _check_h(hmax, "hmax")
    n = g.n
    cur = [1 << v for v in range(n)]
    rows = []
    for h in range(1, hmax + 1):
        nxt = []
        for v in range(n):
            acc = cur[v]
            for u in g.neighbors(v):
                acc |= cur[u]
            nxt.append(acc)
        cur = nxt
        total = (sum(b.bit_count() for b in cur) - n) // 2
        rows.append(ProfileRow(h, total, total - g.m))
    return PowerProfile(n, g.m, tuple(rows))
