"""Incremental Nagamochi-Ibaraki forest packing.

Each inserted edge goes into the first forest in which its endpoints are
not yet connected; its position in the forest sequence is the edge's NI
index and never changes afterwards. Forests are union-find structures that
only hold the vertices which actually have an edge in them. Because every
edge of forest ``i`` has its endpoints connected in all earlier forests,
the components of forest ``i`` refine those of forest ``i - 1``, so "are
u and v connected in forest j" is monotone in ``j`` and can be binary
searched.
"""

from __future__ import annotations

from .unionfind import DisjointSets


class ForestPacking:
    """Maintains NI indices for an undirected multigraph under insertions.

    Forests are 1-indexed; ``trees[0]`` is a placeholder so that
    ``trees[i]`` is forest ``i``.
    """

    def __init__(self, check: bool = False) -> None:
        self.trees: list[DisjointSets | None] = [None]
        self.last_tree: dict[int, int] = {}
        self.index: list[int] = []
        self.check = check

    @property
    def k(self) -> int:
        return len(self.trees) - 1

    def __len__(self) -> int:
        return len(self.index)

    def _connected(self, u: int, v: int, i: int) -> bool:
        if i == 0:
            return True
        tree = self.trees[i]
        return tree.find(u) == tree.find(v)

    def find_tree(self, u: int, v: int, upper_bound: int) -> int:
        """Least forest index in which ``u`` and ``v`` are disconnected.

        Only forests ``1..upper_bound`` are probed; both endpoints must be
        members of all of them.
        """
        lo, hi = 0, upper_bound
        while lo <= hi:
            mid = (lo + hi) // 2
            if self._connected(u, v, mid):
                lo = mid + 1
            else:
                hi = mid - 1
        if self.check:
            for j in range(1, upper_bound + 1):
                assert self._connected(u, v, j) == (j < lo), "forest connectivity not monotone"
        return lo

    def insert(self, u: int, v: int) -> int:
        """Place edge ``(u, v)`` and return its NI index."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        last = self.last_tree
        bound = min(last.get(u, 0), last.get(v, 0))
        i = self.find_tree(u, v, bound)
        if i > bound + 1:
            raise AssertionError(f"forest index {i} skips past bound {bound}")
        if i > self.k:
            self.trees.append(DisjointSets())
        tree = self.trees[i]
        for x in (u, v):
            if i > last.get(x, 0):
                last[x] = last.get(x, 0) + 1
                tree.add(x)
        tree.union(u, v)
        self.index.append(i)
        return i

    def forest_edges(self) -> list[list[int]]:
        """Edge ids grouped by forest; entry ``i - 1`` lists forest ``i``."""
        groups: list[list[int]] = [[] for _ in range(self.k)]
        for e, i in enumerate(self.index):
            groups[i - 1].append(e)
        return groups

    def inverse_sum(self) -> float:
        return sum(1.0 / i for i in self.index)
