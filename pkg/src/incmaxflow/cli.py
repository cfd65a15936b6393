"""Command-line entry point.

    incmaxflow run --workload random-stream --n 60 --m 1200 --epsilon 0.25 --out run.csv
    incmaxflow run --workload graph.txt --epsilon 0.1 --verify-every 10
    incmaxflow sparsify --input graph.txt --epsilon 0.5 --out sparse.txt

``run`` exits with status 0 only if no verified step violated the
approximation guarantee; ``sparsify`` writes one ``u v w`` line per arc.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .bench import WORKLOAD_KINDS, emit_csv, gen_workload, load_workload, run
from .graph import read_edge_list
from .incflow import DEFAULT_CONSTANT, FlowConfig
from .nipacking import ForestPacking
from .sparsify import sample_sparsifier


def _run(args: argparse.Namespace) -> int:
    if args.workload in WORKLOAD_KINDS:
        params = {"n": args.n, "m": args.m, "q": args.q, "count": args.count}
        workload = gen_workload(args.workload, seed=args.seed, **params)
    elif os.path.exists(args.workload):
        workload = load_workload(args.workload)
    else:
        print(f"error: {args.workload!r} is neither a workload kind nor a file", file=sys.stderr)
        return 2
    config = FlowConfig(constant=args.constant, exact_rational=args.exact_rational)
    stats = run(workload, args.epsilon, config, seed=args.seed, verify_every=args.verify_every)
    if args.out:
        emit_csv(stats, args.out)
    fstar = "" if stats.final_fstar is None else f" F*={stats.final_fstar}"
    print(
        f"{workload.name}: m={stats.m} F={stats.final_value}{fstar} rho={stats.rho} "
        f"phases={stats.augmentations} violations={stats.violations}/{stats.verified_steps} "
        f"arcs_into_D={stats.arcs_into_d} time={stats.wall_time:.2f}s"
    )
    return 1 if stats.violations else 0


def _sparsify(args: argparse.Namespace) -> int:
    n, _s, _t, edges = read_edge_list(args.input)
    packing = ForestPacking()
    for u, v in edges:
        packing.insert(u, v)
    # zero-flow residual graph: both directions of every edge, sharing the NI index
    arcs, lam = [], []
    for (u, v), ell in zip(edges, packing.index):
        arcs += [(u, v), (v, u)]
        lam += [ell, ell]
    rng = np.random.default_rng(args.seed)
    sparse = sample_sparsifier(n, arcs, lam, args.beta, args.gamma, args.epsilon, rng)
    if args.out:
        with open(args.out, "w") as fh:
            sparse.write(fh)
    else:
        sparse.write(sys.stdout)
    print(f"rho={sparse.rho} arcs={len(sparse.weights)}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="incmaxflow", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="stream a workload through the incremental flow algorithm")
    p.add_argument("--workload", default="random-stream",
                   help=f"one of {', '.join(WORKLOAD_KINDS)} or an edge-list file")
    p.add_argument("--n", type=int, default=60, help="vertices (random-stream)")
    p.add_argument("--m", type=int, default=1200, help="edges (random-stream)")
    p.add_argument("--q", type=int, default=3, help="side size (bipartite)")
    p.add_argument("--count", type=int, default=10, help="parallel edges (parallel-stress)")
    p.add_argument("--epsilon", type=float, default=0.25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--constant", type=float, default=DEFAULT_CONSTANT, help="sample-size constant c")
    p.add_argument("--verify-every", type=int, default=None,
                   help="compare with the exact max flow every k steps; 0 disables "
                        "(default: every step if n <= 60, else off)")
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--exact-rational", action="store_true",
                   help="keep sampler prefix sums as exact fractions")
    p.set_defaults(func=_run)

    p = sub.add_parser("sparsify", help="sparsify the zero-flow residual graph of an edge list")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--gamma", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_sparsify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
