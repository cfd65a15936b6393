import math

import networkx as nx
import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from incmaxflow.bench import bipartite_workload
from incmaxflow.graph import Arc, Direction, UndirectedMultiGraph
from incmaxflow.oracle import (
    IncrementalExactFlow,
    balance,
    count_k_projections,
    connectivities,
    cuts,
    edge_connectivity,
    exact_max_flow,
    gamma_overlap_check,
    global_min_cut,
    k_projection,
    max_flow_value,
    min_cut_value,
    min_residual_balance,
    ni_packing_violations,
    residual_arcs,
    residual_balance_check,
    undirected_cut,
    verify_ni_packing,
)
from incmaxflow.sparsify import ni_decomposition

from conftest import random_multigraph


def scipy_max_flow(n, edges, s, t):
    cap = np.zeros((n, n), dtype=np.int32)
    for u, v in edges:
        cap[u, v] += 1
        cap[v, u] += 1
    return maximum_flow(csr_matrix(cap), s, t).flow_value


def test_exact_small_cases():
    assert max_flow_value(2, [(0, 1)], 0, 1) == 1
    assert max_flow_value(3, [(0, 2), (0, 1), (1, 2)], 0, 2) == 2
    assert min_cut_value(3, [(0, 2), (0, 1), (1, 2)], 0, 2) == 2
    w = bipartite_workload(4)
    assert max_flow_value(w.n, w.edges, w.s, w.t) == 4
    g = UndirectedMultiGraph(3, 0, 2)
    g.add_edge(0, 1)
    assert exact_max_flow(g) == 0


def test_max_flow_min_cut_duality(rnd):
    for _ in range(150):
        n = rnd.randint(2, 8)
        edges = random_multigraph(rnd, n, rnd.randint(0, 20), parallel_burst=0.15)
        s, t = rnd.sample(range(n), 2)
        value = max_flow_value(n, edges, s, t)
        assert value == min_cut_value(n, edges, s, t)
        assert value == scipy_max_flow(n, edges, s, t)


def test_incremental_exact_matches_scratch(rnd):
    for _ in range(20):
        n = rnd.randint(2, 15)
        edges = random_multigraph(rnd, n, 60, parallel_burst=0.1)
        inc = IncrementalExactFlow(n, 0, n - 1)
        for m, (u, v) in enumerate(edges, 1):
            inc.insert(u, v)
            if m % 7 == 0 or m == len(edges):
                assert inc.value == max_flow_value(n, edges[:m], 0, n - 1)


def test_balance_definition():
    cycle = [(i, (i + 1) % 6) for i in range(6)]
    assert all(balance(cycle, side) == 1 for side in cuts(6))
    arcs = [(0, 1), (1, 0), (1, 0)]
    assert balance(arcs, 0b01) == 0.5
    assert balance([(0, 1)], 0b01) == math.inf


def test_zero_flow_residual_is_balanced():
    g = UndirectedMultiGraph(4, 0, 3)
    for e in [(0, 1), (1, 2), (2, 3), (0, 2)]:
        g.add_edge(*e)
    assert min_residual_balance(4, residual_arcs(g)) == 1
    assert residual_balance_check(g, 0.9)


def test_residual_balance_two_paths():
    # s=0, a=1, b=2, t=3; paths s-a-t and s-b-t, one unit on the first
    g = UndirectedMultiGraph(4, 0, 3)
    sa, at = g.add_edge(0, 1), g.add_edge(1, 3)
    g.add_edge(0, 2), g.add_edge(2, 3)
    g.augment_path([Arc(sa, Direction.UV), Arc(at, Direction.UV)])
    assert balance(residual_arcs(g), 0b0001) == pytest.approx(1 / 3)
    assert residual_balance_check(g, 0.5)
    with pytest.raises(ValueError):
        residual_balance_check(g, 0.6)


def test_edge_connectivity_cases():
    path = [(0, 1), (1, 2), (2, 3)]
    assert edge_connectivity(4, path, 1) == 1
    assert edge_connectivity(3, [(0, 1), (0, 1), (1, 2)], 0) >= 2
    for k in range(2, 7):
        clique = [(u, v) for u in range(k) for v in range(u + 1, k)]
        for e in range(len(clique)):
            c = edge_connectivity(k, clique, e)
            assert c == k - 1
            u, v = clique[e]
            assert c == min_cut_value(k, clique, u, v)


def test_connectivities_match_networkx(rnd):
    for _ in range(20):
        n = rnd.randint(2, 8)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rnd.shuffle(pairs)
        edges = pairs[: rnd.randint(1, len(pairs))]
        G = nx.Graph(edges)
        conn = connectivities(n, edges)
        for (u, v), c in zip(edges, conn):
            assert c == nx.edge_connectivity(G, u, v)


def test_k_projection_extremes():
    arcs = [(0, 1), (1, 2), (2, 0), (1, 0)]
    conn = connectivities(3, arcs)
    side = 0b001
    full = {j for j, (u, v) in enumerate(arcs) if u == 0 and v != 0}
    assert k_projection(arcs, 1, side, conn) == full
    assert k_projection(arcs, max(conn) + 1, side, conn) == frozenset()


def test_k_projection_count_bound_small(rnd):
    for _ in range(10):
        n = rnd.randint(3, 6)
        arcs = random_multigraph(rnd, n, 12)
        if global_min_cut(n, arcs) == 0:
            continue
        conn = connectivities(n, arcs)
        lam = global_min_cut(n, arcs)
        for k in range(lam, max(conn) + 1):
            for alpha in (1, 1.5, 2):
                assert count_k_projections(n, arcs, k, alpha, conn) <= 2 * n ** (2 * alpha)


def test_verify_ni_packing_examples():
    tri = [(1, 2), (2, 3), (1, 3)]
    assert verify_ni_packing(4, tri, [1, 1, 2])
    assert not verify_ni_packing(4, tri, [1, 1, 1])
    assert not verify_ni_packing(4, [(0, 1), (2, 3)], [1, 2])
    assert ni_packing_violations(4, tri, [1, 0, 2])
    assert ni_packing_violations(4, tri, [1, 1])


def test_gamma_overlap_examples():
    edges = [(0, 1), (1, 2)]
    d = ni_decomposition([1, 1])
    assert gamma_overlap_check(edges, d, 0b001) == 1
    assert gamma_overlap_check(edges, d, 0b111) is None
    assert gamma_overlap_check([(0, 1)], d, 0b100) is None


def test_cut_enumeration_cap():
    with pytest.raises(ValueError):
        next(cuts(21))
    assert undirected_cut([(0, 1)], 0b01) == 1


def test_packing_audit_agrees_with_full_check(rnd):
    from incmaxflow.oracle import PackingAudit

    for _ in range(300):
        n = rnd.randint(2, 6)
        edges = random_multigraph(rnd, n, rnd.randint(1, 10), parallel_burst=0.3)
        # mostly valid-looking but arbitrary indices
        idx = [rnd.randint(1, 3) for _ in edges]
        audit = PackingAudit()
        for m, ((u, v), i) in enumerate(zip(edges, idx), 1):
            incremental_ok = not audit.add(u, v, i)
            full_ok = verify_ni_packing(n, edges[:m], idx[:m])
            assert incremental_ok == full_ok
            if not full_ok:
                break
