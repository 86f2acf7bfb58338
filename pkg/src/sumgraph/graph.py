"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency rows.

Row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``{u, v}`` is an edge,
so neighbourhood unions are single big-int ORs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 4096


class GraphError(ValueError):
    """Invalid graph input (loops, duplicates, bad indices, malformed text)."""


class _Unreachable:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    __str__ = __repr__


UNREACHABLE = _Unreachable()


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graphs need at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        total = 0
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise GraphError(f"row {v} has bits beyond n={self.n}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
            total += row.bit_count()
        if total != 2 * self.m:
            raise GraphError(f"edge count {self.m} inconsistent with degree sum {total}")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        rows = tuple(rows)
        return cls(len(rows), rows, sum(r.bit_count() for r in rows) // 2)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under vertex map ``v -> perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows), self.m)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]], strict: bool = True) -> Graph:
    """Build a graph from vertex pairs.

    Loops and out-of-range endpoints are always rejected. With ``strict`` a pair
    given twice (in either order) is an error; otherwise duplicates are merged.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise GraphError(f"n={n} exceeds size cap {MAX_VERTICES}")
    rows = [0] * n
    m = 0
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if (rows[u] >> v) & 1:
            if strict:
                raise GraphError(f"duplicate edge ({u}, {v})")
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        m += 1
    return Graph(n, tuple(rows), m)


# ---------------------------------------------------------------- text I/O

def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, strict: bool = True) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format.

    In strict mode every edge must satisfy u < v and lines must be sorted.
    Errors carry the 1-based line number.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphError("line 1: missing header")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise GraphError(f"line 1: malformed header {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"edge count mismatch: header says {m}, found {len(body)} lines")
    if n < 1 or n > MAX_VERTICES:
        raise GraphError(f"line 1: vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    prev = None
    for i, line in enumerate(body, start=2):
        toks = line.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise GraphError(f"line {i}: malformed edge {line!r}")
        u, v = int(toks[0]), int(toks[1])
        if not (u < n and v < n):
            raise GraphError(f"line {i}: vertex out of range in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"line {i}: loop at vertex {u}")
        if strict:
            if u > v:
                raise GraphError(f"line {i}: expected u < v, got {u} {v}")
            if prev is not None and (u, v) <= prev:
                raise GraphError(f"line {i}: edges not sorted")
            prev = (u, v)
        if (rows[u] >> v) & 1:
            raise GraphError(f"line {i}: duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), m)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_edge_list(g))


# ---------------------------------------------------------------- structure

def _require_nonempty(g: Graph) -> None:
    if g.n < 1:
        raise GraphError("empty graph")


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def regular_degree(g: Graph) -> Optional[int]:
    _require_nonempty(g)
    degs = g.degrees()
    d = degs[0]
    return d if all(x == d for x in degs) else None


def min_degree(g: Graph) -> int:
    _require_nonempty(g)
    return min(g.degrees())


def balls(g: Graph, radius: int) -> list[int]:
    """Closed balls of the given radius around every vertex, as bitsets.

    Level-synchronous BFS from all sources at once:
    ball_r(v) = ball_{r-1}(v) | OR over neighbours u of ball_{r-1}(u).
    """
    cur = [1 << v for v in range(g.n)]
    for _ in range(radius):
        nxt = []
        changed = False
        for v in range(g.n):
            acc = cur[v]
            for u in iter_bits(g.adj[v]):
                acc |= cur[u]
            if acc != cur[v]:
                changed = True
            nxt.append(acc)
        cur = nxt
        if not changed:
            break
    return cur


@dataclass(frozen=True)
class DistanceTable:
    n: int
    dist: tuple[tuple, ...]

    def __getitem__(self, uv):
        u, v = uv
        return self.dist[u][v]

    def rows(self) -> list[list]:
        """Rows with the unreachable sentinel rendered as the string ``"inf"``."""
        return [[x if x is not UNREACHABLE else "inf" for x in row] for row in self.dist]


def all_pairs_distances(g: Graph) -> DistanceTable:
    n = g.n
    table = [[UNREACHABLE] * n for _ in range(n)]
    cur = [1 << v for v in range(n)]
    for v in range(n):
        table[v][v] = 0
    level = 0
    while True:
        level += 1
        nxt = []
        changed = False
        for v in range(n):
            acc = cur[v]
            for u in iter_bits(g.adj[v]):
                acc |= cur[u]
            new = acc & ~cur[v]
            if new:
                changed = True
                row = table[v]
                for u in iter_bits(new):
                    row[u] = level
            nxt.append(acc)
        cur = nxt
        if not changed:
            break
    return DistanceTable(n, tuple(tuple(r) for r in table))


def bfs_distances(g: Graph, source: int) -> list:
    """Single-source hop distances with a plain queue."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in iter_bits(g.adj[v]):
            if dist[u] is UNREACHABLE:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter(g: Graph) -> int:
    _require_nonempty(g)
    full = (1 << g.n) - 1
    cur = [1 << v for v in range(g.n)]
    h = 0
    while not all(b == full for b in cur):
        nxt = []
        for v in range(g.n):
            acc = cur[v]
            for u in iter_bits(g.adj[v]):
                acc |= cur[u]
            nxt.append(acc)
        if nxt == cur:
            raise GraphError("infinite diameter: graph is disconnected")
        cur = nxt
        h += 1
    return h
