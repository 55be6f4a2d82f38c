"""Compare the solver with and without the deviation pre-phase on non-isomorphic regular pairs."""

import argparse

from isoprobe.generators import PairSpec, cycle, generate
from isoprobe.graph import disjoint_union
from isoprobe.solver import SolverConfig, precheck, random_iso


def pairs(count):
    yield "C_6 vs 2C_3", cycle(6), disjoint_union(cycle(3), cycle(3))
    specs = [(8, 2), (8, 3), (9, 2), (10, 3), (8, 4), (10, 2), (12, 3), (14, 3)]
    made = seed = 0
    while made < count:
        n, d = specs[made % len(specs)]
        seed += 1
        g1, g2 = generate(PairSpec("random_regular", "nonisomorphic", seed, {"n": n, "d": d}))
        if precheck(g1, g2) is not None:
            continue
        made += 1
        yield f"{d}-reg n={n} s={seed}", g1, g2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=20)
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--epsilon", type=float, default=0.01)
    args = ap.parse_args()

    print(f"{'pair':<22} {'no-full':>8} {'walks(dev)':>11} {'walks(full)':>12}")
    total = [0, 0, 0, 0]
    for name, g1, g2 in pairs(args.pairs):
        stayed = w_dev = w_full = 0
        for seed in range(args.seeds):
            a = random_iso(g1, g2, SolverConfig(epsilon=args.epsilon, seed=seed))
            b = random_iso(g1, g2, SolverConfig(epsilon=args.epsilon, seed=seed,
                                                use_deviation_phase=False))
            stayed += not a.stats.entered_full_phase
            w_dev += a.stats.walks
            w_full += b.stats.walks
        print(f"{name:<22} {stayed:>5}/{args.seeds:<2} {w_dev:>11} {w_full:>12}")
        for i, x in enumerate((stayed, args.seeds, w_dev, w_full)):
            total[i] += x
    print(f"{'total':<22} {total[0] / total[1]:>8.3f} {total[2]:>11} {total[3]:>12}")


if __name__ == "__main__":
    main()
