"""Executable verdicts for the sumgraph inequalities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constructions import circulant
from .graph import Graph, GraphError, diameter, is_connected, min_degree, regular_degree
from .power import edge_growth
from .sumsets import ResidueSet, is_prime
from .verdict import Verdict


def _f(eps: float) -> float:
    return eps - (1.0 - math.sqrt(eps)) ** 3 / 4.0


@dataclass(frozen=True)
class EpsilonBracket:
    """Interval [lo, hi] containing the positive root of eps = (1 - sqrt(eps))^3 / 4."""

    lo: float
    hi: float

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return (self.lo + self.hi) / 2

    @property
    def eps1(self) -> float:
        return math.sqrt(self.mid)

    def residual(self) -> float:
        return abs(_f(self.mid))

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "width": self.width, "mid": self.mid,
                "eps1": self.eps1}


def epsilon_star(tol: float = 1e-12) -> EpsilonBracket:
    """Bisection on [0, 1/4]; f is increasing there so the root is unique."""
    if not 0 < tol < 0.1:
        raise ValueError(f"tol must lie in (0, 0.1), got {tol}")
    lo, hi = 0.0, 0.25
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _f(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return EpsilonBracket(lo, hi)


_EPS = epsilon_star(1e-12)


def _n_choose_2(n: int) -> int:
    return n * (n - 1) // 2


def check_thm15(g: Graph, eps: Optional[EpsilonBracket] = None) -> Verdict:
    """|3E| >= min{C(n,2), (1+eps)|E|} for a connected regular graph.

    Raises GraphError for disconnected graphs and ValueError for non-regular ones;
    use :func:`check_thm15_or_na` for a NOT-APPLICABLE verdict instead.
    """
    eps = eps or _EPS
    if not is_connected(g):
        raise GraphError("check_thm15 needs a connected graph")
    d = regular_degree(g)
    if d is None:
        raise ValueError("check_thm15 needs a regular graph")
    total3 = edge_growth(g, 3).total(3)
    cap = _n_choose_2(g.n)
    # rhs of the epsilon side as exact rationals at both bracket ends
    lo_side = (1 + Fraction(eps.lo)) * g.m
    hi_side = (1 + Fraction(eps.hi)) * g.m
    details = {"n": g.n, "d": d, "edges": g.m, "eps_lo": eps.lo, "eps_hi": eps.hi,
               "ratio": Fraction(total3, g.m) if g.m else None}
    if total3 == cap:
        return Verdict("thm15", total3, cap, "complete", True, details)
    bracket = {"lo": float(lo_side), "hi": float(hi_side)}
    if cap <= lo_side:
        # cap side is the binding min yet was not reached
        return Verdict("thm15", total3, cap, "complete", total3 >= cap, details)
    if total3 >= hi_side:
        return Verdict("thm15", total3, bracket, "epsilon", True, details)
    if total3 >= lo_side:
        details["status"] = "BORDERLINE"
    return Verdict("thm15", total3, bracket, "epsilon", False, details)


def not_applicable(name: str, reason: str) -> Verdict:
    return Verdict(name, None, None, "not-applicable", True, {"reason": reason})


def check_thm15_or_na(g: Graph, eps: Optional[EpsilonBracket] = None) -> Verdict:
    if not is_connected(g):
        return not_applicable("thm15", "graph is disconnected")
    if regular_degree(g) is None:
        return not_applicable("thm15", "graph is not regular")
    return check_thm15(g, eps)


def check_thm14(p: int, a: ResidueSet, hmax: int) -> list[Verdict]:
    """|hE| >= min{C(p,2), h|E|} for the loopless Cayley graph of A in Z_p."""
    if not is_prime(p):
        raise ValueError(f"p not prime: {p}")
    if a.modulus != p:
        raise ValueError(f"set modulus {a.modulus} differs from p={p}")
    if 0 not in a:
        raise ValueError("A must contain 0")
    if not a.is_symmetric():
        raise ValueError("A not symmetric")
    if len(a) < 2:
        raise ValueError("A must differ from {0}")
    if hmax < 1:
        raise ValueError("hmax must be >= 1")
    g = circulant(p, a.without_zero())
    prof = edge_growth(g, hmax)
    cap = _n_choose_2(p)
    out = []
    for row in prof.rows:
        linear = row.h * g.m
        rhs = min(cap, linear)
        if row.total == cap:
            branch = "complete"
        else:
            branch = "linear" if linear <= cap else "complete"
        out.append(Verdict("thm14", row.total, rhs, branch, row.total >= rhs,
                           {"p": p, "h": row.h, "A": a.members, "edges": g.m}))
    return out


def prop16_bound(n: int, d: int) -> Fraction:
    return Fraction(3 * n - (d + 3), d + 1)


def check_prop16(g: Graph) -> Verdict:
    """diam(G) <= (3n - (d+3)) / (d+1) with d the minimum degree."""
    if not is_connected(g):
        raise GraphError("check_prop16 needs a connected graph")
    d = min_degree(g)
    bound = prop16_bound(g.n, d)
    diam = diameter(g)
    return Verdict("prop16", bound, diam, "diameter", bound >= diam,
                   {"n": g.n, "min_degree": d, "bound_float": float(bound)})


@dataclass(frozen=True)
class Conj18Stat:
    applicable: bool
    n: int
    d: int
    excess2: Optional[int] = None
    per_n: Optional[Fraction] = None
    trivial_bound_holds: Optional[bool] = None

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "n": self.n, "d": self.d,
                "excess2": self.excess2,
                "per_n": None if self.per_n is None else str(self.per_n),
                "trivial_bound_holds": self.trivial_bound_holds}


def conj18_stat(g: Graph) -> Conj18Stat:
    """|2E \\ E| and |2E \\ E| / n when the square is not complete.

    The trivial bound |2E \\ E| >= n/2 is evaluated when n >= d + 2.
    """
    d = regular_degree(g)
    if d is None:
        raise ValueError("conj18_stat needs a regular graph")
    if not is_connected(g):
        raise GraphError("conj18_stat needs a connected graph")
    prof = edge_growth(g, 2)
    if prof.total(2) == _n_choose_2(g.n):
        return Conj18Stat(False, g.n, d)
    excess2 = prof.excess(2)
    trivial = 2 * excess2 >= g.n if g.n >= d + 2 else None
    return Conj18Stat(True, g.n, d, excess2, Fraction(excess2, g.n), trivial)


def conj18_verdict(g: Graph) -> Verdict:
    """Trivial-bound verdict |2E \\ E| >= n/2 wrapped for the CLI."""
    if regular_degree(g) is None or not is_connected(g):
        return not_applicable("conj18", "graph is not connected and regular")
    s = conj18_stat(g)
    if not s.applicable:
        return not_applicable("conj18", "square is complete")
    return Verdict("conj18_trivial", s.excess2, Fraction(g.n, 2), "trivial",
                   s.trivial_bound_holds is not False, s.to_json())
