"""Workload generation, instrumented runs and CSV output."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import read_edge_list
from .incflow import FlowConfig, IncrementalMaxFlow, PhaseRecord
from .oracle import IncrementalExactFlow

CSV_HEADER = ["step", "phase", "F", "Fstar", "violation", "arcs_in_D", "samples_drawn"]
WORKLOAD_KINDS = ("random-stream", "bipartite", "parallel-stress")


@dataclass
class Workload:
    name: str
    n: int
    s: int
    t: int
    edges: list[tuple[int, int]]
    expected_fstar: Optional[list[int]] = None


def bipartite_workload(q: int) -> Workload:
    """Complete bipartite graph on ``S = 0..q-1`` and ``T = q..2q-1``.

    ``s = 0`` and ``t = 2q - 1``. All edges avoiding ``t`` come first, then
    the edges ``(v, t)`` for ``v`` in ``S``, each of which raises the max
    flow by one.
    """
    if q < 1:
        raise ValueError("q must be positive")
    s, t = 0, 2 * q - 1
    first = [(a, b) for a in range(q) for b in range(q, 2 * q) if b != t]
    second = [(a, t) for a in range(q)]
    expected = [0] * len(first) + list(range(1, q + 1))
    return Workload(f"bipartite-q{q}", 2 * q, s, t, first + second, expected)


def random_stream_workload(n: int, m: int, seed: int) -> Workload:
    """``m`` uniformly random vertex pairs (repeats allowed), ``s = 0``, ``t = n - 1``."""
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = np.random.default_rng(seed)
    u = rng.integers(0, n, size=m)
    shift = rng.integers(1, n, size=m)
    v = (u + shift) % n
    edges = list(zip(u.tolist(), v.tolist()))
    return Workload(f"random-n{n}-m{m}-seed{seed}", n, 0, n - 1, edges)


def parallel_stress_workload(count: int, n: int = 2, u: int = 0, v: int = 1) -> Workload:
    return Workload(f"parallel-{count}", n, u, v, [(u, v)] * count, list(range(1, count + 1)))


def gen_workload(kind: str, seed: int = 0, **params) -> Workload:
    if kind == "bipartite":
        return bipartite_workload(params.get("q", 3))
    if kind == "random-stream":
        return random_stream_workload(params.get("n", 60), params.get("m", 1200), seed)
    if kind == "parallel-stress":
        return parallel_stress_workload(params.get("count", 10), params.get("n", 2))
    raise ValueError(f"unknown workload kind {kind!r}; expected one of {WORKLOAD_KINDS}")


def load_workload(path: str) -> Workload:
    n, s, t, edges = read_edge_list(path)
    return Workload(str(path), n, s, t, edges)


@dataclass
class StepRecord:
    step: int
    phase: int
    value: int
    fstar: Optional[int]
    violation: bool
    arcs_in_d: int
    samples_drawn: int


@dataclass
class RunStats:
    workload: str
    epsilon: float
    rho: int
    steps: list[StepRecord] = field(default_factory=list)
    phases: list[PhaseRecord] = field(default_factory=list)
    wall_time: float = 0.0
    direct_arcs: int = 0
    sampled_arcs: int = 0

    @property
    def m(self) -> int:
        return max(len(self.steps) - 1, 0)

    @property
    def final_value(self) -> int:
        return self.steps[-1].value if self.steps else 0

    @property
    def final_fstar(self) -> Optional[int]:
        return self.steps[-1].fstar if self.steps else None

    @property
    def augmentations(self) -> int:
        return sum(1 for p in self.phases if p.complete)

    @property
    def violations(self) -> int:
        return sum(1 for r in self.steps if r.violation)

    @property
    def verified_steps(self) -> int:
        return sum(1 for r in self.steps if r.fstar is not None)

    @property
    def arcs_into_d(self) -> int:
        return self.direct_arcs + self.sampled_arcs


def default_verify_every(n: int) -> int:
    return 1 if n <= 60 else 0


def run(
    workload: Workload,
    epsilon: float,
    config: FlowConfig | None = None,
    seed: int = 0,
    verify_every: Optional[int] = None,
) -> RunStats:
    """Stream ``workload`` through the algorithm, checking against exact flows.

    With ``verify_every = v > 0`` the exact max flow is compared at every
    ``v``-th step (and step 0); ``0`` disables verification. An empty
    workload yields stats without any step rows.
    """
    if verify_every is None:
        verify_every = default_verify_every(workload.n)
    algo = IncrementalMaxFlow(workload.n, workload.s, workload.t, epsilon, config, seed)
    exact = IncrementalExactFlow(workload.n, workload.s, workload.t) if verify_every else None
    stats = RunStats(workload.name, epsilon, algo.rho)

    def record(step: int) -> None:
        fstar = None
        violation = False
        if exact is not None and step % verify_every == 0:
            fstar = exact.value
            violation = algo.value < (1 - epsilon) * fstar
        stats.steps.append(
            StepRecord(step, algo.phase.index, algo.value, fstar, violation, algo.h_size, algo.draws)
        )

    start = time.perf_counter()
    if not workload.edges:
        return stats
    record(0)
    for i, (u, v) in enumerate(workload.edges, 1):
        algo.insert(u, v)
        if exact is not None:
            exact.insert(u, v)
        record(i)
    stats.wall_time = time.perf_counter() - start
    stats.phases = algo.phases
    stats.direct_arcs = algo.direct_arcs
    stats.sampled_arcs = algo.sampled_arcs
    return stats


def emit_csv(stats: RunStats, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in stats.steps:
            writer.writerow(
                [
                    r.step,
                    r.phase,
                    r.value,
                    "" if r.fstar is None else r.fstar,
                    int(r.violation),
                    r.arcs_in_d,
                    r.samples_drawn,
                ]
            )
