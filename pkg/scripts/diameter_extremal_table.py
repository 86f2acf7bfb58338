"""Diameter of the odd-degree extremal family against the floor bound."""

import argparse
import time

from sumgraph.constructions import DiamExtremalParams, diameter_extremal
from sumgraph.graph import diameter, is_connected, regular_degree


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", default="5,7")
    ap.add_argument("--kmax", type=int, default=4)
    args = ap.parse_args(argv)
    print(f"{'d':>3} {'k':>3} {'n':>5} {'regular':>8} {'conn':>5} {'diam':>5} "
          f"{'a-1':>5} {'floor':>6} {'gap':>4} {'ms':>7}")
    for d in map(int, args.degrees.split(",")):
        for k in range(args.kmax + 1):
            t = time.perf_counter()
            g = diameter_extremal(d, k)
            ms = (time.perf_counter() - t) * 1e3
            p = DiamExtremalParams(d, k)
            delta = diameter(g)
            fl = (3 * g.n - (d + 3)) // (d + 1)
            print(f"{d:>3} {k:>3} {g.n:>5} {str(regular_degree(g) == d):>8} "
                  f"{str(is_connected(g)):>5} {delta:>5} {p.a - 1:>5} {fl:>6} {fl - delta:>4} {ms:>7.2f}")


if __name__ == "__main__":
    main()
