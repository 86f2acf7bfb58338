"""Generation of connected regular graphs and extremal scans over growth objectives."""

from __future__ import annotations

import csv
import heapq
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Union

from .graph import Graph, GraphError, diameter, is_connected, iter_bits
from .power import edge_growth

DEDUP_CAP = 10
REJECTION_CAP = 1000

MIN_3RATIO = "min-3ratio"
MIN_2EXCESS = "min-2excess"
OBJECTIVES = (MIN_3RATIO, MIN_2EXCESS)


# ---------------------------------------------------------------- canonical form

def labeled_code(g: Graph) -> str:
    """Upper-triangle adjacency bits, column by column: (0,1), (0,2), (1,2), (0,3), ..."""
    return "".join("1" if g.has_edge(i, j) else "0"
                   for j in range(1, g.n) for i in range(j))


def _canonical_search(g: Graph) -> tuple[str, int]:
    # Level-wise minimisation: the code is a concatenation of fixed-width
    # columns, so the lexicographically smallest code over all n! orderings is
    # obtained by keeping, at each position, every partial ordering whose
    # column is minimal. The survivors at the end are exactly the orderings
    # attaining the minimum, i.e. a coset of the automorphism group.
    n = g.n
    adj = g.adj
    survivors = [((v,), 1 << v) for v in range(n)]
    columns = []
    for k in range(1, n):
        best = None
        nxt = []
        for order, used in survivors:
            for x in range(n):
                if (used >> x) & 1:
                    continue
                row = adj[x]
                col = 0
                for y in order:
                    col = (col << 1) | ((row >> y) & 1)
                if best is None or col < best:
                    best = col
                    nxt = [(order + (x,), used | (1 << x))]
                elif col == best:
                    nxt.append((order + (x,), used | (1 << x)))
        survivors = nxt
        columns.append(format(best, f"0{k}b"))
    return "".join(columns), len(survivors)


def canonical_code(g: Graph) -> str:
    """Minimum of :func:`labeled_code` over all vertex relabelings (n <= 10)."""
    if g.n > DEDUP_CAP:
        raise ValueError(f"canonical form limited to n <= {DEDUP_CAP}")
    return _canonical_search(g)[0]


def automorphism_count(g: Graph) -> int:
    if g.n > DEDUP_CAP:
        raise ValueError(f"automorphism count limited to n <= {DEDUP_CAP}")
    return _canonical_search(g)[1]


def graph_from_code(n: int, code: str) -> Graph:
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if code[pos] == "1":
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph.from_rows(rows)


# ---------------------------------------------------------------- exhaustive enumeration

def _check_nd(n: int, d: int) -> None:
    if n < 1 or not 0 <= d < n:
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    if (n * d) % 2:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")


def _labeled_regular(n: int, d: int) -> Iterator[tuple[int, ...]]:
    # Complete the lowest vertex with spare degree by choosing its remaining
    # neighbours among higher vertices that still have spare degree.
    rows = [0] * n
    need = [d] * n

    def rec(i: int):
        while i < n and need[i] == 0:
            i += 1
        if i == n:
            yield tuple(rows)
            return
        cand = [j for j in range(i + 1, n) if need[j] > 0]
        r = need[i]
        if len(cand) < r:
            return
        for chosen in combinations(cand, r):
            for j in chosen:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                need[j] -= 1
            need[i] = 0
            yield from rec(i + 1)
            need[i] = r
            for j in chosen:
                rows[i] ^= 1 << j
                rows[j] ^= 1 << i
                need[j] += 1

    yield from rec(0)


def _bfs_ordered_regular(n: int, d: int) -> Iterator[tuple[int, ...]]:
    # Connected d-regular graphs labelled in breadth-first order: when vertex i
    # is completed, its not-yet-seen neighbours receive the next free labels.
    # Every connected graph has such a labelling, so every isomorphism class
    # appears, with far fewer labelled copies than the full enumeration.
    rows = [0] * n
    need = [d] * n

    def rec(i: int, nxt: int):
        if i == n:
            yield tuple(rows)
            return
        if i >= nxt:
            return  # vertex never reached: disconnected
        r = need[i]
        seen = [j for j in range(i + 1, nxt) if need[j] > 0]
        for c in range(min(r, n - nxt), -1, -1):
            if r - c > len(seen):
                continue
            fresh = list(range(nxt, nxt + c))
            for old in combinations(seen, r - c):
                chosen = old + tuple(fresh)
                for j in chosen:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    need[j] -= 1
                need[i] = 0
                yield from rec(i + 1, nxt + c)
                need[i] = r
                for j in chosen:
                    rows[i] ^= 1 << j
                    rows[j] ^= 1 << i
                    need[j] += 1

    if n == 1:
        yield (0,)
        return
    yield from rec(0, 1)


def cover_connected_regular(n: int, d: int) -> Iterator[Graph]:
    """At least one labelled copy of every connected d-regular class on n vertices.

    Only breadth-first labelled graphs are produced, so classes repeat but far
    less than in the full labelled enumeration; usable beyond the dedup cap.
    """
    _check_nd(n, d)
    for rows in _bfs_ordered_regular(n, d):
        yield Graph.from_rows(rows)


def enumerate_connected_regular(n: int, d: int, dedup: bool = False) -> Iterator[Graph]:
    """Connected d-regular graphs on n vertices.

    Without ``dedup`` every labelled graph is produced once. With ``dedup`` one
    representative per isomorphism class is produced (the graph decoded from
    its canonical code), in order of first discovery.
    """
    _check_nd(n, d)
    if dedup and n > DEDUP_CAP:
        raise ValueError(f"dedup enumeration limited to n <= {DEDUP_CAP}")
    if not dedup:
        for rows in _labeled_regular(n, d):
            g = Graph.from_rows(rows)
            if is_connected(g):
                yield g
        return
    seen = set()
    for rows in _bfs_ordered_regular(n, d):
        g = Graph.from_rows(rows)
        code = canonical_code(g)
        if code not in seen:
            seen.add(code)
            yield graph_from_code(n, code)


# ---------------------------------------------------------------- random generation

def sub_seed(seed: int, index: int) -> int:
    """Per-candidate seed; fixed so serial and parallel runs agree."""
    return (seed * 1_000_003 + index) & 0xFFFFFFFFFFFF


def _pair_points(n: int, d: int, rng: random.Random) -> Optional[list[int]]:
    # Pair half-edges one pair at a time, only ever accepting a pair that
    # keeps the graph simple; None when the remaining points cannot be paired.
    points = [v for v in range(n) for _ in range(d)]
    rows = [0] * n
    while points:
        for _ in range(64):
            i, j = rng.randrange(len(points)), rng.randrange(len(points))
            u, v = points[i], points[j]
            if u != v and not (rows[u] >> v) & 1:
                break
        else:
            ok = [(i, j) for i in range(len(points)) for j in range(i + 1, len(points))
                  if points[i] != points[j] and not (rows[points[i]] >> points[j]) & 1]
            if not ok:
                return None
            i, j = rng.choice(ok)
            u, v = points[i], points[j]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        for idx in sorted((i, j), reverse=True):
            points[idx] = points[-1]
            points.pop()
    return rows


def random_connected_regular(n: int, d: int, seed: int) -> Graph:
    """A random connected d-regular graph, deterministic in (n, d, seed).

    Restarts on a stuck pairing or a disconnected outcome, at most
    REJECTION_CAP times.
    """
    _check_nd(n, d)
    rng = random.Random(seed)
    for _ in range(REJECTION_CAP):
        rows = _pair_points(n, d, rng)
        if rows is None:
            continue
        g = Graph.from_rows(rows)
        if is_connected(g):
            return g
    raise GraphError(f"rejection cap {REJECTION_CAP} exceeded for n={n}, d={d}")


# ---------------------------------------------------------------- scans

@dataclass(frozen=True)
class SearchRecord:
    canon: str
    n: int
    d: int
    edges: int
    excess2: int
    total3: int
    diameter: int
    objective: str
    objective_value: Fraction

    def sort_key(self):
        return (self.objective_value, self.n, self.canon)

    def metrics(self) -> dict:
        return {"edges": self.edges, "excess2": self.excess2, "total3": self.total3,
                "diameter": self.diameter}

    def to_json(self) -> dict:
        return {"canon": self.canon, "n": self.n, "d": self.d, "metrics": self.metrics(),
                "objective": self.objective, "objective_value": str(self.objective_value)}

    def graph(self) -> Graph:
        return graph_from_code(self.n, self.canon)


@dataclass(frozen=True)
class ExhaustiveSource:
    """Every connected d-regular graph on n vertices.

    ``dedup`` gives one graph per class (n <= 10); ``cover`` gives the
    breadth-first labelled copies (every class, possibly repeated); neither
    gives every labelled graph.
    """

    n: int
    d: int
    dedup: bool = True
    cover: bool = False

    def graphs(self) -> Iterator[Graph]:
        if self.cover:
            return cover_connected_regular(self.n, self.d)
        return enumerate_connected_regular(self.n, self.d, self.dedup)


@dataclass(frozen=True)
class RandomSource:
    n: int
    d: int
    count: int
    seed: int

    def graphs(self, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
        stop = self.count if stop is None else stop
        for i in range(start, stop):
            yield random_connected_regular(self.n, self.d, sub_seed(self.seed, i))


def make_record(g: Graph, objective: str) -> Optional[SearchRecord]:
    """Metrics and objective for one graph, or None when the relevant power is complete."""
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    degs = g.degrees()
    d = degs[0] if len(set(degs)) == 1 else -1
    prof = edge_growth(g, 3)
    cap = g.n * (g.n - 1) // 2
    if objective == MIN_3RATIO:
        if prof.total(3) == cap:
            return None
        value = Fraction(prof.total(3), g.m)
    else:
        if prof.total(2) == cap:
            return None
        value = Fraction(prof.excess(2), g.n)
    canon = canonical_code(g) if g.n <= DEDUP_CAP else labeled_code(g)
    return SearchRecord(canon, g.n, d, g.m, prof.excess(2), prof.total(3),
                        diameter(g), objective, value)


def _records(graphs: Iterable[Graph], objective: str) -> list[SearchRecord]:
    out = []
    for g in graphs:
        r = make_record(g, objective)
        if r is not None:
            out.append(r)
    return out


def _random_chunk(args) -> list[SearchRecord]:
    src, start, stop, objective = args
    return _records(src.graphs(start, stop), objective)


def _graph_chunk(args) -> list[SearchRecord]:
    rows_list, objective = args
    return _records((Graph.from_rows(rows) for rows in rows_list), objective)


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


Source = Union[ExhaustiveSource, RandomSource, Iterable[Graph]]


def extremal_scan(source: Source, objective: str, top_k: int = 100,
                  jobs: int = 1) -> list[SearchRecord]:
    """Rank non-saturating candidates by objective value, smallest first.

    Ties break on (n, canon). Only the best ``top_k`` records are kept. With
    ``jobs > 1`` metrics are computed in worker processes; output is identical.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1:
        graphs = source.graphs() if hasattr(source, "graphs") else source
        records: Iterable[SearchRecord] = (
            r for r in (make_record(g, objective) for g in graphs) if r is not None)
        return heapq.nsmallest(top_k, records, key=SearchRecord.sort_key)

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        if isinstance(source, RandomSource):
            step = max(1, source.count // (4 * jobs))
            tasks = [(source, s, min(s + step, source.count), objective)
                     for s in range(0, source.count, step)]
            batches = pool.map(_random_chunk, tasks)
        else:
            graphs = source.graphs() if hasattr(source, "graphs") else source
            tasks = (([g.adj for g in chunk], objective)
                     for chunk in _chunks(graphs, 256))
            batches = pool.map(_graph_chunk, tasks)
        records = (r for batch in batches for r in batch)
        return heapq.nsmallest(top_k, records, key=SearchRecord.sort_key)


def records_to_jsonl(records: Iterable[SearchRecord]) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in records)


def records_to_csv(records: Iterable[SearchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "d", "edges", "excess2", "total3", "diameter", "objective"])
    for r in records:
        w.writerow([r.n, r.d, r.edges, r.excess2, r.total3, r.diameter, str(r.objective_value)])
    return buf.getvalue()
