"""Mean walks on (K_n, K_n^sigma): highly symmetric graphs should be solved immediately."""

import argparse
import random
import statistics

from isoprobe.generators import complete, random_permutation
from isoprobe.graph import apply_permutation
from isoprobe.solver import SolverConfig, random_iso


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 32])
    ap.add_argument("--runs", type=int, default=100)
    args = ap.parse_args()
    for n in args.sizes:
        walks = []
        for seed in range(args.runs):
            h = apply_permutation(complete(n), random_permutation(n, random.Random(seed)))
            walks.append(random_iso(complete(n), h, SolverConfig(seed=seed)).stats.walks)
        print(f"K_{n:<4} mean walks {statistics.mean(walks):.2f}  max {max(walks)}")


if __name__ == "__main__":
    main()
