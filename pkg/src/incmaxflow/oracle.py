"""Brute-force ground truth for small instances.

Nothing in here reuses the algorithmic modules: max flows are plain BFS
augmentation, connectivity is DFS labelling and cuts are enumerated as
bitmasks. Cut enumeration is limited to ``n <= MAX_CUT_VERTICES``.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .graph import FlowState, UndirectedMultiGraph
from .sparsify import Decomposition

MAX_CUT_VERTICES = 20

Edges = Sequence[tuple[int, int]]


def cuts(n: int) -> Iterator[int]:
    """All nonempty proper vertex subsets of ``range(n)`` as bitmasks."""
    if n > MAX_CUT_VERTICES:
        raise ValueError(f"cut enumeration is limited to n <= {MAX_CUT_VERTICES}")
    return iter(range(1, (1 << n) - 1))


def st_cuts(n: int, s: int, t: int) -> Iterator[int]:
    for side in cuts(n):
        if (side >> s) & 1 and not (side >> t) & 1:
            yield side


def _crosses(side: int, u: int, v: int) -> bool:
    return bool((side >> u) & 1) and not (side >> v) & 1


def directed_cut(arcs: Iterable[tuple[int, int]], side: int) -> tuple[int, int]:
    """``(leaving, entering)`` arc counts for the vertex set ``side``."""
    out = back = 0
    for u, v in arcs:
        if _crosses(side, u, v):
            out += 1
        elif _crosses(side, v, u):
            back += 1
    return out, back


def undirected_cut(edges: Iterable[tuple[int, int]], side: int) -> int:
    return sum(1 for u, v in edges if ((side >> u) ^ (side >> v)) & 1)


def balance(arcs: Iterable[tuple[int, int]], side: int) -> float:
    """Ratio of leaving to entering arcs; ``inf`` when nothing enters."""
    out, back = directed_cut(arcs, side)
    if back == 0:
        return math.inf
    return out / back


# -- max flow -----------------------------------------------------------------


class _UnitFlow:
    """Unit-capacity undirected flow with BFS augmentation."""

    def __init__(self, n: int, s: int, t: int) -> None:
        self.n, self.s, self.t = n, s, t
        self.adj: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        self.ends: list[tuple[int, int]] = []
        self.f: list[int] = []  # flow u -> v in {-1, 0, 1}
        self.value = 0

    def add(self, u: int, v: int) -> int:
        e = len(self.ends)
        self.ends.append((u, v))
        self.f.append(0)
        self.adj[u].append((v, e, 1))
        self.adj[v].append((u, e, -1))
        return e

    def _search(self) -> list | None:
        prev: list = [None] * self.n
        prev[self.s] = (-1, -1, 0)
        queue = deque([self.s])
        while queue:
            x = queue.popleft()
            for y, e, sign in self.adj[x]:
                # residual capacity x->y is 1 - sign * f
                if prev[y] is None and sign * self.f[e] < 1:
                    prev[y] = (x, e, sign)
                    if y == self.t:
                        return prev
                    queue.append(y)
        return None

    def augment_once(self) -> bool:
        prev = self._search()
        if prev is None:
            return False
        y = self.t
        while y != self.s:
            x, e, sign = prev[y]
            self.f[e] += sign
            y = x
        self.value += 1
        return True

    def saturate(self) -> int:
        while self.augment_once():
            pass
        return self.value


def max_flow_value(n: int, edges: Edges, s: int, t: int) -> int:
    """Exact s-t max flow of an undirected unit-capacity multigraph."""
    if s == t:
        raise ValueError("source and sink must differ")
    flow = _UnitFlow(n, s, t)
    for u, v in edges:
        flow.add(u, v)
    return flow.saturate()


def exact_max_flow(g: UndirectedMultiGraph) -> int:
    return max_flow_value(g.n, g.edge_list(), g.s, g.t)


def min_cut_value(n: int, edges: Edges, s: int, t: int) -> int:
    """Minimum s-t cut by enumerating every vertex subset."""
    return min(undirected_cut(edges, side) for side in st_cuts(n, s, t))


class IncrementalExactFlow:
    """Exact max-flow value maintained under edge insertions.

    The flow is kept saturated. Between augmentations the set of vertices
    the source reaches in the residual graph only grows, so each insertion
    costs a partial search; a full search is only redone after the flow
    changes. An insertion raises the max flow by at most one.
    """

    def __init__(self, n: int, s: int, t: int) -> None:
        self._flow = _UnitFlow(n, s, t)
        self._reach = self._reachable()

    @property
    def value(self) -> int:
        return self._flow.value

    def _reachable(self) -> list[bool]:
        fl = self._flow
        seen = [False] * fl.n
        seen[fl.s] = True
        stack = [fl.s]
        while stack:
            self._expand(stack, seen)
        return seen

    def _expand(self, stack: list[int], seen: list[bool]) -> None:
        fl = self._flow
        x = stack.pop()
        for y, e, sign in fl.adj[x]:
            if not seen[y] and sign * fl.f[e] < 1:
                seen[y] = True
                stack.append(y)

    def insert(self, u: int, v: int) -> int:
        self._flow.add(u, v)
        seen = self._reach
        stack = [y for x, y in ((u, v), (v, u)) if seen[x] and not seen[y]]
        for y in stack:
            seen[y] = True
        while stack:
            self._expand(stack, seen)
        if seen[self._flow.t]:
            self._flow.saturate()
            self._reach = self._reachable()
        return self._flow.value


# -- residual graphs and balance ----------------------------------------------


def residual_arcs(g: UndirectedMultiGraph) -> list[tuple[int, int]]:
    """Residual multigraph of ``g``'s current flow as a list of arcs."""
    arcs = []
    for (u, v), state in zip(g.edges(), g.flow):
        if state is FlowState.ZERO:
            arcs += [(u, v), (v, u)]
        elif state is FlowState.FORWARD:
            arcs += [(v, u), (v, u)]
        else:
            arcs += [(u, v), (u, v)]
    return arcs


def min_residual_balance(n: int, arcs: Sequence[tuple[int, int]]) -> float:
    return min((balance(arcs, side) for side in cuts(n)), default=math.inf)


def residual_balance_check(g: UndirectedMultiGraph, epsilon: float) -> bool:
    """Whether every residual cut of ``g`` has balance at least ``epsilon / 2``.

    Requires ``F <= (1 - epsilon) F*``.
    """
    fstar = exact_max_flow(g)
    if g.flow_value() > (1 - epsilon) * fstar:
        raise ValueError(
            f"flow value {g.flow_value()} exceeds (1 - eps) * F* = {(1 - epsilon) * fstar}"
        )
    return min_residual_balance(g.n, residual_arcs(g)) >= epsilon / 2


# -- connectivity ---------------------------------------------------------------


def edge_connectivity(n: int, edges: Edges, e: int) -> int:
    """Max flow between the endpoints of edge ``e`` (including ``e`` itself)."""
    u, v = edges[e]
    return max_flow_value(n, edges, u, v)


def connectivities(n: int, edges: Edges) -> list[int]:
    """Edge connectivity of every edge, computed once per endpoint pair."""
    memo: dict[tuple[int, int], int] = {}
    out = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in memo:
            memo[key] = max_flow_value(n, edges, u, v)
        out.append(memo[key])
    return out


def global_min_cut(n: int, edges: Edges) -> int:
    return min(undirected_cut(edges, side) for side in cuts(n))


def k_projection(
    arcs: Sequence[tuple[int, int]], k: float, side: int, conn: Sequence[int]
) -> frozenset[int]:
    """Ids of arcs leaving ``side`` whose underlying edge connectivity is ``>= k``.

    ``conn[j]`` is the connectivity of the undirected edge under ``arcs[j]``
    (see :func:`connectivities`).
    """
    return frozenset(
        j for j, (u, v) in enumerate(arcs) if conn[j] >= k and _crosses(side, u, v)
    )


def count_k_projections(
    n: int, arcs: Sequence[tuple[int, int]], k: float, alpha: float, conn: Sequence[int]
) -> int:
    """Distinct k-projections over cuts whose undirected size is at most ``alpha * k``."""
    seen = set()
    for side in cuts(n):
        if undirected_cut(arcs, side) <= alpha * k:
            seen.add(k_projection(arcs, k, side, conn))
    return len(seen)


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    label = [-1] * n
    for root in range(n):
        if label[root] >= 0:
            continue
        label[root] = root
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if label[y] < 0:
                    label[y] = root
                    stack.append(y)
    return label


def ni_packing_violations(n: int, edges: Edges, indices: Sequence[int]) -> list[str]:
    """Reasons why ``indices`` is not an NI forest packing of ``edges``.

    Checks that every index is a positive integer, every forest is acyclic,
    and every edge in forest ``i`` joins vertices already connected in each
    forest ``j < i``.
    """
    if len(edges) != len(indices):
        return ["one index per edge required"]
    problems = []
    forests: dict[int, list[tuple[int, int]]] = {}
    for e, (edge, i) in enumerate(zip(edges, indices)):
        if not isinstance(i, int) or i < 1:
            problems.append(f"edge {e} has invalid index {i!r}")
            continue
        forests.setdefault(i, []).append(edge)
    if problems:
        return problems
    top = max(forests, default=0)
    labels = {}
    for i in range(1, top + 1):
        forest = forests.get(i, [])
        # a forest has exactly n - (#components) edges
        comps = len(set(_components(n, forest)))
        if len(forest) != n - comps:
            problems.append(f"forest {i} contains a cycle")
        labels[i] = _components(n, forest)
    for e, ((u, v), i) in enumerate(zip(edges, indices)):
        for j in range(1, i):
            if labels[j][u] != labels[j][v]:
                problems.append(f"edge {e} in forest {i} but endpoints split in forest {j}")
                break
    return problems


def verify_ni_packing(n: int, edges: Edges, indices: Sequence[int]) -> bool:
    return not ni_packing_violations(n, edges, indices)


class PackingAudit:
    """Checks an NI packing edge by edge as it grows.

    Appending one edge to forest ``i`` can only merge components of that
    forest, so the packing stays valid iff the new edge closes no cycle in
    forest ``i`` and its endpoints are connected in every earlier forest.
    Equivalent to re-running :func:`ni_packing_violations` after each edge.
    """

    def __init__(self) -> None:
        # per forest: vertex -> component label, label -> members
        self._label: list[dict[int, int]] = []
        self._members: list[dict[int, list[int]]] = []

    def _comp(self, i: int, x: int) -> int:
        return self._label[i - 1].get(x, -1 - x)

    def add(self, u: int, v: int, i: int) -> list[str]:
        if not isinstance(i, int) or i < 1:
            return [f"invalid index {i!r}"]
        while len(self._label) < i:
            self._label.append({})
            self._members.append({})
        problems = []
        for j in range(1, i):
            if self._comp(j, u) != self._comp(j, v):
                problems.append(f"edge ({u}, {v}) in forest {i} but endpoints split in forest {j}")
                break
        a, b = self._comp(i, u), self._comp(i, v)
        if a == b:
            problems.append(f"edge ({u}, {v}) closes a cycle in forest {i}")
            return problems
        label, members = self._label[i - 1], self._members[i - 1]
        ma = members.pop(a, [u])
        mb = members.pop(b, [v])
        if len(ma) < len(mb):
            a, b, ma, mb = b, a, mb, ma
        for x in mb:
            label[x] = a
        for x in ma:
            label[x] = a
        members[a] = ma + mb
        return problems


# -- decompositions --------------------------------------------------------------


def gamma_overlap_check(edges: Edges, decomposition: Decomposition, side: int) -> float | None:
    """Overlap ratio ``sum_i |C & E_i| 2^(i-1) / pi_i`` over ``|C|``; None for empty cuts."""
    crossing = {e for e, (u, v) in enumerate(edges) if ((side >> u) ^ (side >> v)) & 1}
    if not crossing:
        return None
    total = 0.0
    for i, (sub, pi) in enumerate(zip(decomposition.subgraphs, decomposition.pi)):
        total += sum(1 for e in sub if e in crossing) * 2**i / pi
    return total / len(crossing)


def pi_connectivity_violations(n: int, edges: Edges, decomposition: Decomposition) -> list[str]:
    """Edges of class ``i`` with connectivity below ``pi_i`` inside subgraph ``i``."""
    problems = []
    for i, (cls, sub, pi) in enumerate(
        zip(decomposition.classes, decomposition.subgraphs, decomposition.pi)
    ):
        if not cls:
            continue
        sub_edges = [edges[e] for e in sub]
        for e in cls:
            u, v = edges[e]
            c = max_flow_value(n, sub_edges, u, v)
            if c < pi:
                problems.append(f"edge {e} in class {i + 1}: connectivity {c} < {pi:g}")
    return problems
