"""Tabulate |E|, |2E\\E| and |3E\\E| for the block-chain family G_{d,m}
against the closed forms, for a grid of (d, m)."""

import argparse
from fractions import Fraction

from sumgraph.constructions import gdm
from sumgraph.power import edge_growth


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--mmax", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"{'d':>3} {'m':>3} {'n':>5} {'|E|':>6} {'|2E-E|':>7} {'|3E-E|':>7} "
          f"{'x3/n':>8} {'(d2+2)/(d+1)':>13} {'(d2+4)/(d+1)':>13}")
    for d in range(2, args.dmax + 1):
        for m in range(3, args.mmax + 1):
            g = gdm(d, m)
            prof = edge_growth(g, 3)
            x3 = prof.excess(3)
            print(f"{d:>3} {m:>3} {g.n:>5} {g.m:>6} {prof.excess(2):>7} {x3:>7} "
                  f"{str(Fraction(x3, g.n)):>8} {str(Fraction(d * d + 2, d + 1)):>13} "
                  f"{str(Fraction(d * d + 4, d + 1)):>13}")


if __name__ == "__main__":
    main()
