"""Search for NI decompositions where a class edge is weakly connected in its subgraph.

Edges of class i (NI index in [2^(i-1), 2^i)) are checked against the
threshold 2^(i-1) inside F_(i-1) + F_i. The smallest offending simple
graph found is printed along with the overall failure rate.

    python3 scripts/pi_counterexample.py --graphs 200
"""

import argparse
import random

from incmaxflow.nipacking import ForestPacking
from incmaxflow.oracle import pi_connectivity_violations
from incmaxflow.sparsify import ni_decomposition


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rnd = random.Random(args.seed)
    failures = 0
    smallest = None
    for _ in range(args.graphs):
        n = rnd.randint(3, args.max_n)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        rnd.shuffle(pairs)
        edges = pairs[: rnd.randint(1, len(pairs))]
        packing = ForestPacking()
        for u, v in edges:
            packing.insert(u, v)
        problems = pi_connectivity_violations(n, edges, ni_decomposition(packing))
        if problems:
            failures += 1
            if smallest is None or len(edges) < len(smallest[1]):
                smallest = (n, edges, list(packing.index), problems)
    print(f"{failures}/{args.graphs} graphs violate the threshold")
    if smallest:
        n, edges, index, problems = smallest
        print(f"smallest: n={n} m={len(edges)}")
        print(f"  edges   {edges}")
        print(f"  indices {index}")
        for line in problems:
            print(f"  {line}")


if __name__ == "__main__":
    main()
