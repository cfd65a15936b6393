"""Violation rate of the incremental flow as the sample-size constant shrinks.

    python3 scripts/approx_sweep.py --constants 5390 50 1 0.1 0.01 --seeds 10
"""

import argparse

from incmaxflow.bench import gen_workload, run
from incmaxflow.incflow import FlowConfig


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--constants", type=float, nargs="+", default=[5390, 50, 1, 0.1, 0.01])
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--n", type=int, default=60)
    parser.add_argument("--m", type=int, default=1200)
    parser.add_argument("--epsilon", type=float, default=0.25)
    args = parser.parse_args()

    print(f"{'c':>8} {'rho':>10} {'phases':>7} {'violations':>11} {'rate':>7} {'bad runs':>9} {'secs':>6}")
    for c in args.constants:
        bad = steps = phases = bad_runs = 0
        secs = 0.0
        for seed in range(args.seeds):
            w = gen_workload("random-stream", seed=seed, n=args.n, m=args.m)
            st = run(w, args.epsilon, FlowConfig(constant=c), seed=seed, verify_every=1)
            bad += st.violations
            steps += st.verified_steps
            phases += st.augmentations
            bad_runs += st.violations > 0
            secs += st.wall_time
        print(f"{c:>8g} {st.rho:>10} {phases:>7} {bad:>11} {bad / steps:>7.4f} "
              f"{bad_runs:>5}/{args.seeds:<3} {secs:>6.1f}")


if __name__ == "__main__":
    main()
