"""Incremental (1 - eps)-approximate s-t max flow on unit-capacity graphs.

The algorithm keeps a sampled subgraph ``H`` of the residual graph and an
incremental reachability structure over it. New edges go straight into
``H``. As soon as the sink becomes reachable the tree path is augmented,
``H`` is thrown away and redrawn from the inverse-NI-index distribution,
and a new phase starts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Arc, Direction, FlowState, UndirectedMultiGraph
from .reachability import ReachTree
from .sampler import NISampler

DEFAULT_CONSTANT = 5390.0


def sample_budget(n: int, epsilon: float, constant: float = DEFAULT_CONSTANT) -> int:
    """Draws per phase: ``ceil(constant * n * log2(n)**2 / epsilon)``, at least 1."""
    return max(1, math.ceil(constant * n * math.log2(n) ** 2 / epsilon))


@dataclass
class FlowConfig:
    constant: float = DEFAULT_CONSTANT
    exact_rational: bool = False
    # None: tally draws with one multinomial when the budget exceeds the edge count
    aggregate_draws: Optional[bool] = None
    check: bool = False


@dataclass
class PhaseRecord:
    index: int
    edges: int = 0
    draws: int = 0
    sampled_arcs: int = 0
    direct_arcs: int = 0
    end_step: Optional[int] = None

    @property
    def complete(self) -> bool:
        return self.end_step is not None

    @property
    def arcs_into_d(self) -> int:
        return self.sampled_arcs + self.direct_arcs


class IncrementalMaxFlow:
    """Maintains an approximate max flow while edges are inserted.

    ``rng`` is a :class:`numpy.random.Generator` (or a seed for one) and is
    the only source of randomness.
    """

    def __init__(
        self,
        n: int,
        s: int,
        t: int,
        epsilon: float,
        config: FlowConfig | None = None,
        rng: np.random.Generator | int | None = None,
    ) -> None:
        if not 0 < epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
        self.config = config or FlowConfig()
        if self.config.constant <= 0:
            raise ValueError("sample constant must be positive")
        self.epsilon = epsilon
        self.rho = sample_budget(n, epsilon, self.config.constant)
        self.graph = UndirectedMultiGraph(n, s, t)
        self.sampler = NISampler(exact=self.config.exact_rational, check=self.config.check)
        self.rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)

        self.h_arcs: list[Arc] = []
        self.h_size = 0  # arcs in H counting parallel copies and repeat draws
        self.reach = ReachTree(n, s)
        self.phases = [PhaseRecord(index=1)]
        self.steps = 0
        self.direct_arcs = 0
        self.sampled_arcs = 0
        self.draws = 0

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def value(self) -> int:
        return self.graph.flow_value()

    @property
    def phase(self) -> PhaseRecord:
        return self.phases[-1]

    def flow(self) -> list[FlowState]:
        return list(self.graph.flow)

    def query(self, kind: str = "value"):
        if kind == "flow":
            return self.flow()
        if kind == "value":
            return self.value
        raise ValueError(f"unknown query kind {kind!r}")

    def _add_to_h(self, arc: Arc, copies: int = 1) -> None:
        tail, head = self.graph.arc_endpoints(arc)
        self.h_arcs.append(arc)
        self.h_size += copies
        self.reach.insert(tail, head, arc)

    def insert(self, u: int, v: int) -> bool:
        """Insert edge ``(u, v)``; return True if it triggered an augmentation."""
        e = self.graph.add_edge(u, v)
        self.sampler.insert(u, v)
        self.steps += 1
        phase = self.phase
        phase.edges += 1
        for d in Direction:
            self._add_to_h(Arc(e, d))
        phase.direct_arcs += 2
        self.direct_arcs += 2

        if not self.reach.is_reachable(self.graph.t):
            return False
        path = [step.label for step in self.reach.path(self.graph.t)]
        self.graph.augment_path(path)
        phase.end_step = self.steps
        self.phases.append(PhaseRecord(index=phase.index + 1))
        self.resample()
        return True

    def _use_aggregate(self) -> bool:
        if self.config.aggregate_draws is not None:
            return self.config.aggregate_draws
        return self.rho > self.graph.m

    def resample(self) -> None:
        """Redraw ``H`` with ``rho`` samples and rebuild reachability on it."""
        g = self.graph
        self.h_arcs = []
        self.h_size = 0
        steps = []
        added = 0
        if self._use_aggregate():
            counts = self.sampler.sample_counts(self.rng, self.rho)
            for e in np.flatnonzero(counts).tolist():
                c = int(counts[e])
                for d in Direction:
                    arc = Arc(e, d)
                    mult = g.residual_multiplicity(arc)
                    if mult:
                        # repeats are no-ops for reachability: keep one physical arc
                        tail, head = g.arc_endpoints(arc)
                        steps.append((tail, head, arc))
                        self.h_arcs.append(arc)
                        added += c * mult
        else:
            for _ in range(self.rho):
                e = self.sampler.sample(self.rng)
                for arc in g.residual_arcs(e):
                    tail, head = g.arc_endpoints(arc)
                    steps.append((tail, head, arc))
                    self.h_arcs.append(arc)
                    added += 1
        self.h_size = added
        self.draws += self.rho
        self.sampled_arcs += added
        phase = self.phase
        phase.draws += self.rho
        phase.sampled_arcs += added
        self.reach = ReachTree(g.n, g.s, steps)
        if self.config.check:
            self.check_sample()

    def check_sample(self) -> None:
        for arc in self.h_arcs:
            if self.graph.residual_multiplicity(arc) < 1:
                raise AssertionError(f"sampled arc {arc} is not residual")
