"""Walks-to-verdict on isomorphic random 3-regular pairs as n doubles.

    python scripts/sampling_trend.py --sizes 50 100 200 400 --runs 11
"""

import argparse
import random
import statistics
import time

from isoprobe.generators import random_permutation, random_regular
from isoprobe.graph import apply_permutation
from isoprobe.solver import SolverConfig, random_iso


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--runs", type=int, default=11)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-deviation", action="store_true")
    args = ap.parse_args()

    print(f"{'n':>6} {'median':>8} {'mean':>8} {'max':>6} {'ratio':>6} {'sec':>7}")
    prev = None
    for n in args.sizes:
        rng = random.Random(args.seed * 100003 + n)
        walks = []
        t0 = time.perf_counter()
        for run in range(args.runs):
            g = random_regular(n, args.degree, rng)
            h = apply_permutation(g, random_permutation(n, rng))
            cfg = SolverConfig(seed=run, use_deviation_phase=not args.no_deviation)
            v = random_iso(g, h, cfg)
            assert v.isomorphic, v.kind
            walks.append(v.stats.walks)
        med = statistics.median(walks)
        ratio = f"{med / prev:6.2f}" if prev else f"{'-':>6}"
        print(f"{n:>6} {med:>8} {statistics.mean(walks):>8.1f} {max(walks):>6} {ratio} "
              f"{time.perf_counter() - t0:>7.2f}")
        prev = med


if __name__ == "__main__":
    main()
