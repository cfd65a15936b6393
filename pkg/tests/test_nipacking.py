import math

import pytest
from hypothesis import given, settings, strategies as st

from incmaxflow.nipacking import ForestPacking
from incmaxflow.oracle import ni_packing_violations, verify_ni_packing

from conftest import random_multigraph


def build(edges, check=True):
    p = ForestPacking(check=check)
    return p, [p.insert(u, v) for u, v in edges]


def test_triangle_indices():
    edges = [(1, 2), (2, 3), (1, 3)]
    p, idx = build(edges)
    assert idx == [1, 1, 2]
    # static recomputation: the grouping is an NI packing
    assert verify_ni_packing(4, edges, idx)


def test_fourth_edge_after_triangle():
    edges = [(1, 2), (2, 3), (1, 3), (1, 2)]
    p, idx = build(edges)
    assert idx[3] == 2
    assert verify_ni_packing(4, edges, idx)


@pytest.mark.parametrize("count", [1, 2, 5, 40])
def test_parallel_edges_get_consecutive_indices(count):
    p, idx = build([(0, 1)] * count)
    assert idx == list(range(1, count + 1))
    assert p.k == count
    # lazily populated forests hold exactly the two endpoints
    assert all(len(p.trees[i]) == 2 for i in range(1, count + 1))


def test_find_tree_cases():
    p, _ = build([(1, 2), (2, 3)])
    assert p.find_tree(7, 8, 0) == 1
    assert p.find_tree(1, 3, 1) == 2
    p2, _ = build([(0, 1)] * 3)
    assert p2.find_tree(0, 1, 3) == 4


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        ForestPacking().insert(3, 3)


def test_last_tree_contiguous_membership():
    p, _ = build([(0, 1), (0, 1), (1, 2), (0, 2), (0, 1), (2, 3)])
    for v, last in p.last_tree.items():
        for i in range(1, p.k + 1):
            assert (v in p.trees[i]) == (i <= last)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 12).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
                max_size=60,
            ),
        )
    )
)
def test_packing_valid_stable_and_bounded(case):
    n, edges = case
    p = ForestPacking(check=True)
    seen = []
    for m, (u, v) in enumerate(edges, 1):
        seen.append(p.insert(u, v))
        assert p.index == seen  # earlier indices never move
        assert p.k <= m
        assert ni_packing_violations(n, edges[:m], p.index) == []
        if m >= 2:
            assert p.inverse_sum() <= 2 * n * math.log2(m)


def test_forest_count_never_decreases(rnd):
    edges = random_multigraph(rnd, 15, 300, parallel_burst=0.3)
    p = ForestPacking()
    k = 0
    for u, v in edges:
        p.insert(u, v)
        assert p.k >= k
        k = p.k
    groups = p.forest_edges()
    assert sorted(e for g in groups for e in g) == list(range(len(edges)))
