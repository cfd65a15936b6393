"""Undirected unit-capacity multigraph carrying an s-t flow.

Edges are append-only. Each edge stores its endpoints in insertion order
``(u, v)`` and one of three flow states relative to that order, which is
all a unit-capacity integral flow can reach. The residual multigraph is
never materialized; :func:`residual_multiplicity` answers arc queries
directly from the flow states.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Iterable, Iterator, Sequence
from typing import NamedTuple, TextIO


class FlowState(enum.IntEnum):
    """Unit flow on an edge, signed relative to its stored ``(u, v)``."""

    ZERO = 0
    FORWARD = 1  # one unit u -> v
    BACKWARD = -1  # one unit v -> u


class Direction(enum.IntEnum):
    UV = 0
    VU = 1

    def reverse(self) -> "Direction":
        return Direction.VU if self is Direction.UV else Direction.UV


class Arc(NamedTuple):
    """A directed copy of an undirected edge."""

    edge: int
    direction: Direction

    def reverse(self) -> "Arc":
        return Arc(self.edge, self.direction.reverse())


class PathError(ValueError):
    """Raised when an arc sequence is not a valid residual s-t path."""


class UndirectedMultiGraph:
    """Append-only multigraph on vertices ``0..n-1`` with an s-t flow."""

    def __init__(self, n: int, s: int, t: int) -> None:
        if n < 2:
            raise ValueError("need at least two vertices")
        for x in (s, t):
            if not 0 <= x < n:
                raise ValueError(f"terminal {x} out of range for n={n}")
        if s == t:
            raise ValueError("source and sink must differ")
        self.n = n
        self.s = s
        self.t = t
        self.tails: list[int] = []
        self.heads: list[int] = []
        self.flow: list[FlowState] = []
        self._value = 0

    def __len__(self) -> int:
        return len(self.tails)

    @property
    def m(self) -> int:
        return len(self.tails)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.tails[e], self.heads[e]

    def edges(self) -> Iterator[tuple[int, int]]:
        return zip(self.tails, self.heads)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(zip(self.tails, self.heads))

    def add_edge(self, u: int, v: int) -> int:
        """Append edge ``(u, v)`` with zero flow and return its id."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < self.n:
                raise ValueError(f"vertex {x} out of range for n={self.n}")
        self.tails.append(u)
        self.heads.append(v)
        self.flow.append(FlowState.ZERO)
        return len(self.tails) - 1

    def arc_endpoints(self, arc: Arc) -> tuple[int, int]:
        u, v = self.tails[arc.edge], self.heads[arc.edge]
        return (u, v) if arc.direction is Direction.UV else (v, u)

    def residual_multiplicity(self, arc: Arc) -> int:
        """Number of copies of ``arc`` in the residual multigraph (0, 1 or 2)."""
        state = self.flow[arc.edge]
        if state is FlowState.ZERO:
            return 1
        along = (state is FlowState.FORWARD) == (arc.direction is Direction.UV)
        return 0 if along else 2

    def residual_arcs(self, e: int) -> list[Arc]:
        """Residual arcs of edge ``e``, parallel copies listed separately."""
        out = []
        for d in Direction:
            arc = Arc(e, d)
            out.extend([arc] * self.residual_multiplicity(arc))
        return out

    def augment_path(self, path: Sequence[Arc]) -> None:
        """Push one unit of flow along a residual s-t path.

        The path must start at ``s``, end at ``t``, be connected head to
        tail, use only residual arcs and touch every underlying edge at most
        once. Nothing is modified if any check fails.
        """
        if not path:
            raise PathError("empty path")
        seen: set[int] = set()
        at = self.s
        for arc in path:
            if not 0 <= arc.edge < self.m:
                raise PathError(f"unknown edge {arc.edge}")
            if arc.edge in seen:
                raise PathError(f"edge {arc.edge} used twice")
            seen.add(arc.edge)
            tail, head = self.arc_endpoints(arc)
            if tail != at:
                raise PathError(f"arc {arc} does not continue from vertex {at}")
            if self.residual_multiplicity(arc) == 0:
                raise PathError(f"arc {arc} is saturated")
            at = head
        if at != self.t:
            raise PathError(f"path ends at {at}, not at sink {self.t}")

        for arc in path:
            state = self.flow[arc.edge]
            if state is FlowState.ZERO:
                self.flow[arc.edge] = (
                    FlowState.FORWARD if arc.direction is Direction.UV else FlowState.BACKWARD
                )
            else:
                # residual and not ZERO means the arc opposes the current flow
                self.flow[arc.edge] = FlowState.ZERO
        self._value += 1

    def flow_value(self) -> int:
        return self._value

    def net_outflow(self, v: int) -> int:
        """Net flow leaving ``v``, recomputed from the edge states."""
        total = 0
        for u, w, f in zip(self.tails, self.heads, self.flow):
            if u == v:
                total += int(f)
            elif w == v:
                total -= int(f)
        return total

    def conservation_violations(self) -> list[int]:
        """Vertices other than s and t whose net outflow is nonzero."""
        net = [0] * self.n
        for u, w, f in zip(self.tails, self.heads, self.flow):
            net[u] += int(f)
            net[w] -= int(f)
        return [v for v in range(self.n) if net[v] and v not in (self.s, self.t)]


def read_edge_list(stream: TextIO | str | os.PathLike) -> tuple[int, int, int, list[tuple[int, int]]]:
    """Parse the ``n s t`` / ``u v`` edge-list format.

    Blank lines and lines starting with ``#`` are ignored.
    """
    if isinstance(stream, (str, os.PathLike)):
        with open(stream) as fh:
            return read_edge_list(fh)
    header = None
    edges = []
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(x) for x in fields]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {line!r}") from None
        if header is None:
            if len(values) != 3:
                raise ValueError(f"line {lineno}: header must be 'n s t'")
            header = values
        else:
            if len(values) != 2:
                raise ValueError(f"line {lineno}: edge must be 'u v'")
            edges.append((values[0], values[1]))
    if header is None:
        raise ValueError("missing 'n s t' header")
    n, s, t = header
    return n, s, t, edges


def write_edge_list(stream: TextIO, n: int, s: int, t: int, edges: Iterable[tuple[int, int]]) -> None:
    stream.write(f"{n} {s} {t}\n")
    for u, v in edges:
        stream.write(f"{u} {v}\n")
