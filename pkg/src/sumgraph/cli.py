"""Command-line front end.

Exit codes: 0 success with every requested check holding, 1 when some check
returned holds=false (the offending output is printed in full), 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import checks, constructions, diagnostics, search
from .graph import Graph, GraphError, is_connected, read_graph, regular_degree, serialize_edge_list, write_graph
from .power import edge_growth, power_graph
from .sumsets import ResidueSet, check_cauchy_davenport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    (out or sys.stdout).write(text + "\n")


def _verdict_exit(verdicts) -> int:
    return EXIT_OK if all(v.holds for v in verdicts) else EXIT_FAIL


# ---------------------------------------------------------------- subcommands

def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {', '.join(missing)}")


def cmd_construct(args) -> int:
    fam = args.family
    info = {"family": fam}
    if fam == "gdm":
        _need(args, "d", "m")
        g = constructions.gdm(args.d, args.m)
    elif fam == "diam-extremal":
        _need(args, "d", "k")
        g = constructions.diameter_extremal(args.d, args.k)
        p = constructions.DiamExtremalParams(args.d, args.k)
        info.update(a=p.a, b=p.b)
    elif fam == "circulant":
        _need(args, "n", "gens")
        gens = ResidueSet.parse(args.n, args.gens)
        closed = constructions.circulant_generators(args.n, gens)
        g = constructions.circulant(args.n, gens)
        info["gens"] = closed.members
    elif fam == "clique-path":
        _need(args, "n")
        g = constructions.clique_path(args.n)
        info["clique"] = constructions.clique_size(args.n)
    else:
        _need(args, "n")
        g = {"cycle": constructions.cycle, "complete": constructions.complete,
             "path": constructions.path}[fam](args.n)
    info.update(n=g.n, m=g.m)
    if args.out:
        write_graph(g, args.out)
        info["out"] = args.out
        _emit(info)
    else:
        sys.stdout.write(serialize_edge_list(g))
        if "gens" in info:
            sys.stderr.write(json.dumps(info) + "\n")
    return EXIT_OK


def cmd_power(args) -> int:
    g = read_graph(args.infile)
    if args.h is None and args.profile is None:
        raise UsageError("power needs --h and/or --profile")
    if args.h is not None:
        ph = power_graph(g, args.h)
        if args.out:
            write_graph(ph, args.out)
        else:
            sys.stdout.write(serialize_edge_list(ph))
    if args.profile is not None:
        _emit(edge_growth(g, args.profile).to_json())
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_graph(args.infile)
    wanted = [name for name in ("thm15", "prop16", "conj18") if getattr(args, name)]
    if not wanted:
        wanted = ["thm15", "prop16", "conj18"]
    verdicts = []
    for name in wanted:
        if name == "thm15":
            verdicts.append(checks.check_thm15_or_na(g))
        elif name == "prop16":
            if is_connected(g):
                verdicts.append(checks.check_prop16(g))
            else:
                verdicts.append(checks.not_applicable("prop16", "graph is disconnected"))
        else:
            verdicts.append(checks.conj18_verdict(g))
    _emit([v.to_json() for v in verdicts])
    return _verdict_exit(verdicts)


def cmd_check_cd(args) -> int:
    a = ResidueSet.parse(args.p, args.set)
    verdicts = check_cauchy_davenport(args.p, a, args.hmax)
    _emit([v.to_json() for v in verdicts])
    return _verdict_exit(verdicts)


def cmd_check_thm14(args) -> int:
    a = ResidueSet.parse(args.p, args.set)
    verdicts = checks.check_thm14(args.p, a, args.hmax)
    _emit([v.to_json() for v in verdicts])
    return _verdict_exit(verdicts)


def cmd_diagnose(args) -> int:
    g = read_graph(args.infile)
    if not is_connected(g):
        raise GraphError("diagnose needs a connected graph")
    eps1 = args.eps1 if args.eps1 is not None else diagnostics.DEFAULT_EPS1
    out: dict = {"n": g.n, "m": g.m, "eps1": eps1}
    vertices = [args.vertex] if args.vertex is not None else (
        [] if args.cut else list(range(g.n)))
    if vertices:
        out["decompositions"] = [
            diagnostics.vertex_decomposition(g, v, eps1, allow_irregular=True).to_json()
            for v in vertices]
        out["T_sizes"] = {str(v): len(diagnostics.excess_neighbors(g, v)) for v in vertices}
        if regular_degree(g) is not None:
            out["V1"] = sorted(diagnostics.v1_membership(g, eps1))
    if args.cut or args.vertex is None:
        if g.n >= 2:
            out["cut"] = diagnostics.geodesic_cut(g).to_json()
    _emit(out)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.exhaustive == (args.random is not None):
        raise UsageError("choose exactly one of --exhaustive or --random COUNT")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.exhaustive:
        if args.dedup and args.cover:
            raise UsageError("--dedup and --cover are exclusive")
        source = search.ExhaustiveSource(args.n, args.d, args.dedup, args.cover)
        search._check_nd(args.n, args.d)
    else:
        if args.seed is None:
            raise UsageError("--random needs --seed")
        search._check_nd(args.n, args.d)
        source = search.RandomSource(args.n, args.d, args.random, args.seed)
    records = search.extremal_scan(source, args.objective, args.top, args.jobs)
    text = (search.records_to_csv(records) if args.format == "csv"
            else search.records_to_jsonl(records))
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.objective == search.MIN_3RATIO:
        floor = 1 + checks._EPS.lo
        bad = [r for r in records if r.objective_value < floor]
        if bad:
            sys.stderr.write("counterexample to the 3-fold growth bound:\n")
            sys.stderr.write(search.records_to_jsonl(bad))
            return EXIT_FAIL
    return EXIT_OK


def cmd_epsilon(args) -> int:
    _emit(checks.epsilon_star(args.tol).to_json())
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sumgraph", description="Graph powers, growth bounds and extremal search.")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    c = sub.add_parser("construct", help="build a named graph family")
    c.add_argument("--family", required=True, choices=constructions.FAMILIES)
    for name in ("d", "m", "k", "n"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--gens", help="comma-separated generators, e.g. 1,5")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    pw = sub.add_parser("power", help="h-fold sumgraph and growth profile")
    pw.add_argument("--in", dest="infile", required=True)
    pw.add_argument("--h", type=int)
    pw.add_argument("--out")
    pw.add_argument("--profile", type=int, metavar="HMAX")
    pw.set_defaults(func=cmd_power)

    ck = sub.add_parser("check", help="verdicts for growth and diameter bounds")
    ck.add_argument("--in", dest="infile", required=True)
    ck.add_argument("--thm15", action="store_true")
    ck.add_argument("--prop16", action="store_true")
    ck.add_argument("--conj18", action="store_true")
    ck.set_defaults(func=cmd_check)

    for name, func in (("check-cd", cmd_check_cd), ("check-thm14", cmd_check_thm14)):
        s = sub.add_parser(name)
        s.add_argument("--p", type=int, required=True)
        s.add_argument("--set", required=True, help="comma-separated residues")
        s.add_argument("--hmax", type=int, required=True)
        s.set_defaults(func=func)

    dg = sub.add_parser("diagnose", help="shell decompositions and geodesic cut")
    dg.add_argument("--in", dest="infile", required=True)
    dg.add_argument("--vertex", type=int)
    dg.add_argument("--cut", action="store_true")
    dg.add_argument("--eps1", type=float)
    dg.set_defaults(func=cmd_diagnose)

    sr = sub.add_parser("search", help="rank connected regular graphs by growth")
    sr.add_argument("--n", type=int, required=True)
    sr.add_argument("--d", type=int, required=True)
    sr.add_argument("--exhaustive", action="store_true")
    sr.add_argument("--dedup", action="store_true")
    sr.add_argument("--cover", action="store_true",
                    help="breadth-first labelled copies of every class (no dedup cap)")
    sr.add_argument("--random", type=int, metavar="COUNT")
    sr.add_argument("--seed", type=int)
    sr.add_argument("--objective", required=True, choices=search.OBJECTIVES)
    sr.add_argument("--jobs", type=int, default=1)
    sr.add_argument("--top", type=int, default=100)
    sr.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    sr.add_argument("--out")
    sr.set_defaults(func=cmd_search)

    ep = sub.add_parser("epsilon", help="bracket the growth constant")
    ep.add_argument("--tol", type=float, default=1e-12)
    ep.set_defaults(func=cmd_epsilon)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmd is None:
            raise UsageError("missing subcommand")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
