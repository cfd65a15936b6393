"""Phase trace on the complete bipartite instance where every late edge augments.

    python3 scripts/bipartite_trace.py --q 25 --epsilon 0.5
"""

import argparse

from incmaxflow.bench import gen_workload, run


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--q", type=int, default=25)
    parser.add_argument("--epsilon", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    w = gen_workload("bipartite", q=args.q)
    st = run(w, args.epsilon, seed=args.seed, verify_every=1)
    print(f"{w.name}: m={st.m} rho={st.rho} F={st.final_value} F*={st.final_fstar} "
          f"violations={st.violations}")
    print(f"{'phase':>5} {'edges':>6} {'end step':>9} {'draws':>10} {'arcs into D':>12}")
    for p in st.phases:
        end = p.end_step if p.complete else "-"
        print(f"{p.index:>5} {p.edges:>6} {end:>9} {p.draws:>10} {p.arcs_into_d:>12}")


if __name__ == "__main__":
    main()
