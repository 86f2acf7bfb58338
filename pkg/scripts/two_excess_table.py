"""Minimum |2E\\E|/n over connected d-regular graphs, by exhaustive scan."""

import argparse

from sumgraph.search import MIN_2EXCESS, ExhaustiveSource, extremal_scan


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--cover", action="store_true",
                    help="use labelled cover instead of dedup (allows n > 10)")
    args = ap.parse_args(argv)
    print(f"{'n':>3} {'classes':>8} {'min x2/n':>9} {'x2':>4} {'diam':>5} {'x2 >= n/2':>10}")
    for n in range(args.d + 1, args.nmax + 1):
        if n * args.d % 2:
            continue
        src = ExhaustiveSource(n, args.d, dedup=not args.cover, cover=args.cover)
        recs = extremal_scan(src, MIN_2EXCESS, top_k=10**6)
        if not recs:
            print(f"{n:>3} {0:>8} {'-':>9}")
            continue
        best = recs[0]
        print(f"{n:>3} {len(recs):>8} {str(best.objective_value):>9} {best.excess2:>4} "
              f"{best.diameter:>5} {str(all(2 * r.excess2 >= r.n for r in recs)):>10}")


if __name__ == "__main__":
    main()
