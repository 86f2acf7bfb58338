"""Deterministic builders for the explicit graph families.

Labels are fixed so that serialized outputs are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import Iterable, Union

from .graph import Graph, build_graph
from .sumsets import ResidueSet


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------- G_{d,m}

@dataclass(frozen=True)
class GdmParams:
    d: int
    m: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"gdm needs d >= 2, got d={self.d}")
        if self.m < 2:
            raise ValueError(f"gdm needs m >= 2, got m={self.m}")

    @property
    def n(self) -> int:
        return self.m * (self.d + 1)

    def block(self, i: int) -> range:
        return range(i * (self.d + 1), (i + 1) * (self.d + 1))

    def first(self, i: int) -> int:
        return i * (self.d + 1)

    def second(self, i: int) -> int:
        return i * (self.d + 1) + 1


def gdm(d: int, m: int) -> Graph:
    """m blocks of d+1 vertices, each complete minus the edge between its first
    two vertices, linked cyclically: first of block i to second of block i+1."""
    p = GdmParams(d, m)
    edges = []
    for i in range(m):
        for u, v in combinations(p.block(i), 2):
            if (u, v) != (p.first(i), p.second(i)):
                edges.append((u, v))
    for i in range(m):
        edges.append((p.first(i), p.second((i + 1) % m)))
    return build_graph(p.n, edges)


# ---------------------------------------------------------------- diameter-extremal family

@dataclass(frozen=True)
class DiamExtremalParams:
    """Parameters of the d-regular near-extremal-diameter family.

    The long path has k+2 triples of vertices: a head triple, k middle triples
    and a tail triple, so a = 3(k+2). Each triple is glued to one clique-like
    block of B: the head to w_1..w_{d-1}, the middle triples to the k blocks of
    d-2 vertices, the tail to w_{b+2-d}..w_b.
    """

    d: int
    k: int

    def __post_init__(self):
        if self.d < 5 or self.d % 2 == 0:
            raise ValueError(f"d must be odd and >= 5, got d={self.d}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got k={self.k}")

    @property
    def a(self) -> int:
        return 3 * (self.k + 2)

    @property
    def b(self) -> int:
        return (self.k + 2) * (self.d - 2) + 2

    @property
    def n(self) -> int:
        return self.a + self.b

    # 1-based labels v_i, w_j mapped to 0-based vertices
    def v(self, i: int) -> int:
        assert 1 <= i <= self.a
        return i - 1

    def w(self, j: int) -> int:
        assert 1 <= j <= self.b
        return self.a + j - 1


def _complete_minus_matching(vertices: list[int], matched: list[int]) -> list[tuple[int, int]]:
    removed = {frozenset(matched[i:i + 2]) for i in range(0, len(matched), 2)}
    return [(u, v) for u, v in combinations(vertices, 2) if frozenset((u, v)) not in removed]


def diameter_extremal(d: int, k: int) -> Graph:
    p = DiamExtremalParams(d, k)
    a, b, v, w = p.a, p.b, p.v, p.w
    edges: list[tuple[int, int]] = []
    # I: the path
    edges += [(v(i), v(i + 1)) for i in range(1, a)]
    # II: head triple to w_1..w_{d-1}
    skip = {(2, d - 1), (3, 1)}
    edges += [(v(i), w(j)) for i in range(1, 4) for j in range(1, d)
              if (i, j) not in skip]
    # III: mirror image at the tail
    skip = {(a - 1, b + 2 - d), (a - 2, b)}
    for i in range(1, 4):
        for j in range(1, d):
            vi, wj = a + 1 - i, b + 1 - j
            if (vi, wj) not in skip:
                edges.append((v(vi), w(wj)))
    # IV: middle triple r to block r of B
    edges += [(v(3 * r + s), w((d - 2) * r + 1 + t))
              for r in range(1, k + 1) for s in range(1, 4) for t in range(1, d - 1)]
    # V, VI: end blocks, complete minus the consecutive matching on the inner d-3
    head = [w(j) for j in range(1, d)]
    edges += _complete_minus_matching(head, head[1:-1])
    tail = [w(j) for j in range(b + 2 - d, b + 1)]
    edges += _complete_minus_matching(tail, tail[1:-1])
    # VII: middle blocks are cliques
    for r in range(1, k + 1):
        block = [w(j) for j in range(r * (d - 2) + 2, (r + 1) * (d - 2) + 2)]
        edges += list(combinations(block, 2))
    return build_graph(p.n, edges)


# ---------------------------------------------------------------- Cayley / circulant

def _as_residues(n: int, gens: Union[ResidueSet, Iterable[int]]) -> ResidueSet:
    if isinstance(gens, ResidueSet):
        if gens.modulus != n:
            raise ValueError(f"generator modulus {gens.modulus} differs from n={n}")
        return gens
    gens = list(gens)
    for s in gens:
        if not 0 <= s < n:
            raise ValueError(f"generator {s} outside 1..{n - 1}")
    return ResidueSet.of(n, gens)


def circulant_generators(n: int, gens: Union[ResidueSet, Iterable[int]]) -> ResidueSet:
    """The generator set closed under negation mod n (what ``circulant`` uses)."""
    if n < 1:
        raise ValueError(f"circulant needs n >= 1, got {n}")
    s = _as_residues(n, gens)
    if 0 in s:
        raise ValueError("generator 0 would create loops")
    return s.symmetrized()


def circulant(n: int, gens: Union[ResidueSet, Iterable[int]]) -> Graph:
    s = circulant_generators(n, gens)
    edges = set()
    for u in range(n):
        for x in s.members:
            v = (u + x) % n
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


# ---------------------------------------------------------------- clique plus path

def clique_size(n: int) -> int:
    """floor(n^(3/4)) in exact integer arithmetic."""
    return isqrt(isqrt(n ** 3))


def clique_path(n: int) -> Graph:
    """Clique on floor(n^(3/4)) vertices with a path on the remaining vertices
    hanging off vertex 0."""
    if n < 4:
        raise ValueError(f"clique_path needs n >= 4, got {n}")
    q = clique_size(n)
    edges = list(combinations(range(q), 2))
    edges += [(i, i + 1) for i in range(q, n - 1)]
    edges.append((0, q))
    return build_graph(n, edges)


FAMILIES = ("gdm", "diam-extremal", "circulant", "clique-path", "cycle", "complete", "path")
