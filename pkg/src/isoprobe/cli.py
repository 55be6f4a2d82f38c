"""``iso-probe`` command line.

Exit codes: 0 isomorphic, 1 non-isomorphic, 2 usage or input error,
3 inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .generators import FAMILIES, PairSpec, ParameterError, generate
from .graph import DimacsError, parse_dimacs, to_dimacs
from .solver import (INCONCLUSIVE, ISOMORPHIC, NON_ISOMORPHIC_CERTIFIED, SolverConfig,
                     random_iso)

EXIT_ISO, EXIT_NONISO, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _u64(text):
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"{text} is not an unsigned 64-bit integer")
    return value


def _test_parser():
    p = argparse.ArgumentParser(prog="iso-probe", description="Probabilistic graph isomorphism test.")
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--selector", choices=["first-largest", "smallest"], default="first-largest")
    p.add_argument("--no-deviation", action="store_true")
    p.add_argument("--no-blueprint", action="store_true")
    p.add_argument("--full-leaf-budget", type=int, default=64)
    p.add_argument("--max-walks", type=int, default=10 ** 6)
    p.add_argument("--stats", action="store_true")
    p.add_argument("g1")
    p.add_argument("g2")
    return p


def _gen_parser():
    p = argparse.ArgumentParser(prog="iso-probe gen", description="Write a generated graph pair.")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=int, help="degree (random_regular) or dimension (hypercube)")
    p.add_argument("--a", type=int, help="grid rows")
    p.add_argument("--b", type=int, help="grid columns")
    p.add_argument("--relation", choices=["isomorphic", "nonisomorphic"], default="isomorphic")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--out", required=True, help="output prefix; writes PREFIX_1.dimacs and PREFIX_2.dimacs")
    return p


def _verify_parser():
    p = argparse.ArgumentParser(prog="iso-probe verify",
                                description="Run the brute-force occurrence checks on small graphs.")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--random", type=int, default=20, help="number of seeded G(8, 0.4) graphs")
    return p


def _read_graph(path):
    return parse_dimacs(Path(path).read_bytes())


def run_test(argv, out) -> int:
    args = _test_parser().parse_args(argv)
    try:
        g1 = _read_graph(args.g1)
        g2 = _read_graph(args.g2)
    except (OSError, DimacsError) as exc:
        print(f"iso-probe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = SolverConfig(epsilon=args.epsilon, k=args.k, use_deviation_phase=not args.no_deviation,
                           use_blueprint=not args.no_blueprint, selector=args.selector,
                           seed=args.seed, full_leaf_budget=args.full_leaf_budget,
                           max_walks=args.max_walks)
    except ValueError as exc:
        print(f"iso-probe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = random_iso(g1, g2, cfg)
    if verdict.kind == ISOMORPHIC:
        print("isomorphic", file=out)
        print("witness: " + " ".join(map(str, verdict.witness.to_one_based())), file=out)
        code = EXIT_ISO
    elif verdict.kind == NON_ISOMORPHIC_CERTIFIED:
        print("non-isomorphic (certified)", file=out)
        code = EXIT_NONISO
    elif verdict.kind == INCONCLUSIVE:
        print("inconclusive", file=out)
        code = EXIT_INCONCLUSIVE
    else:
        print(f"non-isomorphic (error < {args.epsilon:g})", file=out)
        code = EXIT_NONISO
    if args.stats:
        s = verdict.stats
        print(f"walks: {s.walks}", file=out)
        print(f"nodes: {s.nodes}", file=out)
        print(f"leaves: full={s.leaves_full} path={s.leaves_path} fake={s.leaves_fake}", file=out)
        print(f"automorphisms: {s.automorphisms}", file=out)
        print(f"c: {s.c} (deviation phase: {s.c_deviation})", file=out)
        if verdict.reason:
            print(f"reason: {verdict.reason}", file=out)
    return code


def run_gen(argv, out) -> int:
    args = _gen_parser().parse_args(argv)
    params = {k: getattr(args, k) for k in ("n", "p", "d", "a", "b") if getattr(args, k) is not None}
    try:
        g1, g2 = generate(PairSpec(args.family, args.relation, args.seed, params))
    except ParameterError as exc:
        print(f"iso-probe gen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for i, g in ((1, g1), (2, g2)):
        path = Path(f"{args.out}_{i}.dimacs")
        path.write_text(to_dimacs(g))
        print(f"wrote {path}", file=out)
    return 0


def run_verify(argv, out) -> int:
    from .verify import occurrence_suite

    args = _verify_parser().parse_args(argv)
    ok = True
    for report in occurrence_suite(max_n=args.max_n, random_graphs=args.random):
        print(report.line(), file=out)
        ok &= report.passed
    return 0 if ok else 1


def main(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    if argv and argv[0] == "gen":
        return run_gen(argv[1:], out)
    if argv and argv[0] == "verify":
        return run_verify(argv[1:], out)
    if argv and argv[0] == "test":
        argv = argv[1:]
    return run_test(argv, out)


if __name__ == "__main__":
    sys.exit(main())
