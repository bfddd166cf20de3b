#!/usr/bin/env python3
"""Threshold-constant sweep on random hosts.

Sweeps the constant C in p = C * n^(-1/max(m2,1)) across a range and
records per-cell success frequencies for extraction against the density
target.  Emits the sweep CSV (aggregates ride in trailing comment lines).
"""

import argparse
import sys

from monotile.graphs import pattern_by_name
from monotile.sweep import SweepPlan, run_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pattern", type=str, default="k3")
    parser.add_argument("--n-list", type=str, default="150,300")
    parser.add_argument("--c-list", type=str, default="0.01,0.1,0.5,1,2,5,10")
    parser.add_argument("--epsilon", type=float, default=0.15)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--adversaries", type=str, default="uniform-random")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--timings", action="store_true")
    parser.add_argument("--out", type=str, default=None)
    args = parser.parse_args()

    plan = SweepPlan(
        pattern_name=args.pattern,
        pattern=pattern_by_name(args.pattern),
        n_list=tuple(int(x) for x in args.n_list.split(",") if x),
        C_list=tuple(float(x) for x in args.c_list.split(",") if x),
        epsilon=args.epsilon,
        trials=args.trials,
        seed_base=args.seed,
        adversaries=tuple(args.adversaries.split(",")),
    )
    result = run_sweep(plan, workers=args.workers)
    text = result.to_csv(include_timings=args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    for agg in result.aggregates:
        print(
            f"n={agg.n} C={agg.C:g} {agg.adversary}: "
            f"{agg.successes}/{agg.trials} = {agg.frequency:.2f} "
            f"[{agg.wilson_low:.2f}, {agg.wilson_high:.2f}]",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
