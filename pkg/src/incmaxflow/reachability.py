"""Incremental single-source reachability with path extraction.

Arcs whose tail is not yet reachable wait in a per-vertex pending list.
When a vertex becomes reachable its pending arcs are scanned once and
dropped, so every arc is touched at most twice over the structure's life:
once on insertion and once when its tail is reached.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from typing import NamedTuple


class Step(NamedTuple):
    tail: int
    head: int
    label: Hashable = None


class ReachTree:
    """Vertices reachable from ``source`` over an insert-only arc set.

    Every arc may carry an opaque ``label`` which is handed back by
    :meth:`path`; the flow code uses it to recover residual arcs.
    """

    def __init__(self, n: int, source: int, arcs: Iterable[Step | tuple] = ()) -> None:
        if not 0 <= source < n:
            raise ValueError(f"source {source} out of range for n={n}")
        self.n = n
        self.source = source
        self.parent: list[Step | None] = [None] * n
        self.reached = [False] * n
        self.reached[source] = True
        self.pending: list[list[Step]] = [[] for _ in range(n)]
        self.arcs_inserted = 0
        self.scans = 0
        # initial arcs are filed first and then closed over with one search,
        # which is linear in arcs + vertices
        for arc in arcs:
            step = Step(*arc)
            self._check(step)
            self.arcs_inserted += 1
            self.pending[step.tail].append(step)
        self._extend([source])

    def _check(self, step: Step) -> None:
        if not (0 <= step.tail < self.n and 0 <= step.head < self.n):
            raise ValueError(f"arc {step.tail}->{step.head} out of range for n={self.n}")

    def _extend(self, frontier: list[int]) -> None:
        reached, parent, pending = self.reached, self.parent, self.pending
        while frontier:
            x = frontier.pop()
            arcs, pending[x] = pending[x], []
            self.scans += len(arcs)
            for step in arcs:
                if not reached[step.head]:
                    reached[step.head] = True
                    parent[step.head] = step
                    frontier.append(step.head)

    def insert(self, tail: int, head: int, label: Hashable = None) -> None:
        step = Step(tail, head, label)
        self._check(step)
        self.arcs_inserted += 1
        if not self.reached[tail]:
            self.pending[tail].append(step)
        elif not self.reached[head]:
            self.reached[head] = True
            self.parent[head] = step
            self._extend([head])

    def is_reachable(self, v: int) -> bool:
        return self.reached[v]

    def reached_set(self) -> set[int]:
        return {v for v in range(self.n) if self.reached[v]}

    def path(self, target: int) -> list[Step]:
        """Tree path from the source to ``target``."""
        if not self.reached[target]:
            raise LookupError(f"vertex {target} is not reachable")
        steps = []
        v = target
        while v != self.source:
            step = self.parent[v]
            steps.append(step)
            v = step.tail
        steps.reverse()
        return steps
