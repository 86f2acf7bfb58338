import json
import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from sumgraph.checks import (
    EpsilonBracket,
    check_prop16,
    check_thm14,
    check_thm15,
    check_thm15_or_na,
    conj18_stat,
    epsilon_star,
)
from sumgraph.constructions import complete, cycle, diameter_extremal, gdm, path
from sumgraph.graph import GraphError, build_graph, diameter
from sumgraph.search import enumerate_connected_regular
from sumgraph.sumsets import ResidueSet

from conftest import connected_graphs, petersen, star


def f(e):
    return e - (1 - math.sqrt(e)) ** 3 / 4


def test_epsilon_bracket():
    b = epsilon_star(1e-12)
    assert b.width <= 1e-12
    assert f(b.lo) <= 0 <= f(b.hi)
    assert round(b.mid, 3) == 0.087
    assert b.residual() <= 1e-10
    assert abs(b.eps1 - 0.2956) < 1e-4


def test_epsilon_endpoints():
    assert f(0.0) < 0 < f(0.25)


def test_epsilon_independent_root():
    # fixed-point iteration e <- (1 - sqrt e)^3 / 4 is a contraction near the root
    e = 0.1
    for _ in range(200):
        e = (1 - math.sqrt(e)) ** 3 / 4
    b = epsilon_star(1e-12)
    assert b.lo - 1e-12 <= e <= b.hi + 1e-12


@pytest.mark.parametrize("tol", [0, -1, 0.1, 1])
def test_epsilon_bad_tol(tol):
    with pytest.raises(ValueError):
        epsilon_star(tol)


def test_growth3_petersen():
    v = check_thm15(petersen())
    assert v.lhs == 45 == v.rhs
    assert v.branch == "complete" and v.holds


def test_growth3_c8():
    v = check_thm15(cycle(8))
    b = epsilon_star()
    assert v.lhs == 24
    assert v.branch == "epsilon" and v.holds
    assert v.rhs["hi"] == pytest.approx((1 + b.hi) * 8)
    assert v.rhs["hi"] == pytest.approx(8.699, abs=1e-3)


def test_growth3_star():
    with pytest.raises(ValueError):
        check_thm15(star(4))
    assert check_thm15_or_na(star(4)).branch == "not-applicable"
    with pytest.raises(GraphError):
        check_thm15(build_graph(4, [(0, 1), (2, 3)]))


def test_growth3_borderline_and_failure_paths():
    g = cycle(8)
    # a bracket wide enough that 24 sits between the two sides
    wide = EpsilonBracket(1.5, 2.5)
    v = check_thm15(g, wide)
    assert not v.holds and v.details["status"] == "BORDERLINE"
    v = check_thm15(g, EpsilonBracket(2.5, 2.6))
    assert not v.holds and "status" not in v.details


def test_growth3_small_diameter_takes_complete_branch():
    for n in range(4, 9):
        for d in range(2, n):
            if n * d % 2:
                continue
            for g in enumerate_connected_regular(n, d, dedup=True):
                if diameter(g) <= 3:
                    v = check_thm15(g)
                    assert v.branch == "complete" and v.lhs == v.rhs and v.holds


def test_symmetric_growth_examples():
    v = check_thm14(7, ResidueSet.of(7, [0, 1, 6]), 3)
    assert (v[1].lhs, v[1].rhs, v[1].holds) == (14, 14, True)
    assert (v[2].lhs, v[2].rhs, v[2].holds) == (21, 21, True)
    assert v[2].branch == "complete"


@pytest.mark.parametrize("members, msg", [
    ([0, 1], "not symmetric"),
    ([1, 6], "contain 0"),
    ([0], "differ"),
])
def test_symmetric_growth_rejects(members, msg):
    with pytest.raises(ValueError, match=msg):
        check_thm14(7, ResidueSet.of(7, members), 2)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_symmetric_growth_exhaustive(p):
    half = range(1, p // 2 + 1)
    for r in range(1, len(half) + 1):
        for pick in combinations(half, r):
            a = ResidueSet.of(p, [0, *pick, *(p - x for x in pick)])
            assert all(v.holds for v in check_thm14(p, a, 4))


def test_diameter_bound_examples():
    v = check_prop16(path(5))
    assert v.lhs == Fraction(11, 2) and v.rhs == 4 and v.holds
    v = check_prop16(cycle(8))
    assert v.lhs == Fraction(19, 3) and v.rhs == 4
    g = diameter_extremal(5, 2)
    v = check_prop16(g)
    assert v.lhs == Fraction(3 * 26 - 8, 6) and v.rhs == 11 and v.holds
    with pytest.raises(GraphError):
        check_prop16(build_graph(3, [(0, 1)]))


@settings(max_examples=80)
@given(connected_graphs(max_n=14))
def test_diameter_bound_random_connected(g):
    assert check_prop16(g).holds


def test_two_excess_examples():
    s = conj18_stat(gdm(3, 4))
    assert s.applicable and s.excess2 == 20 and s.per_n == Fraction(5, 4)
    assert s.trivial_bound_holds
    s = conj18_stat(cycle(8))
    assert s.excess2 == 8 and s.per_n == 1
    assert not conj18_stat(complete(4)).applicable
    with pytest.raises(ValueError):
        conj18_stat(star(5))


def test_verdict_json_schema():
    v = check_prop16(cycle(8))
    out = json.loads(json.dumps(v.to_json()))
    assert set(out) == {"name", "lhs", "rhs", "branch", "holds", "details"}
    assert out["lhs"] == "19/3"
