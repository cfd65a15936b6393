"""Importance-sampled cut sparsifiers for balanced directed graphs.

Arcs are drawn i.i.d. with probability proportional to ``1 / lambda_e`` and
every draw adds ``1 / (rho * p_e)`` to the arc's weight, so each arc's
expected weight equals its capacity. Also here: the dyadic connectivity
classes and the NI-index decomposition used to reason about them.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .nipacking import ForestPacking


@dataclass
class WeightedDigraph:
    n: int
    weights: dict[tuple[int, int], float] = field(default_factory=dict)
    rho: int = 0

    def cut_weight(self, side: int) -> float:
        """Weight of arcs leaving the vertex set encoded by bitmask ``side``."""
        return sum(
            w for (u, v), w in self.weights.items() if (side >> u) & 1 and not (side >> v) & 1
        )

    def write(self, stream) -> None:
        for (u, v), w in sorted(self.weights.items()):
            stream.write(f"{u} {v} {w:.17g}\n")


def sparsifier_budget(n: int, lam: Sequence[float], beta: float, gamma: float, epsilon: float) -> int:
    """``ceil(128 gamma (beta + 1) ln n / (0.38 eps^2) * sum(1 / lambda))``."""
    inv = math.fsum(1.0 / x for x in lam)
    return max(1, math.ceil(128 * gamma * (beta + 1) * math.log(n) / (0.38 * epsilon**2) * inv))


def sample_sparsifier(
    n: int,
    arcs: Sequence[tuple[int, int]],
    lam: Sequence[float],
    beta: float,
    gamma: float,
    epsilon: float,
    rng: np.random.Generator,
    rho: int | None = None,
) -> WeightedDigraph:
    """Sparsify a directed multigraph given per-arc connectivity parameters.

    ``lam[j]`` belongs to ``arcs[j]``. Parallel arcs are merged in the
    output; cut weights are unaffected. ``rho`` overrides the draw count
    computed by :func:`sparsifier_budget`.
    """
    if len(arcs) != len(lam):
        raise ValueError("need one connectivity parameter per arc")
    if not arcs:
        raise ValueError("cannot sparsify an empty graph")
    if beta < 1 or gamma < 1:
        raise ValueError("beta and gamma must be at least 1")
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    if min(lam) < 1:
        raise ValueError("connectivity parameters must be at least 1")
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc {u}->{v} out of range for n={n}")
    if rho is None:
        rho = sparsifier_budget(n, lam, beta, gamma, epsilon)

    inv = np.array([1.0 / x for x in lam])
    p = inv / inv.sum()
    counts = np.zeros(len(arcs), dtype=np.int64)
    chunk = 1 << 20
    left = rho
    while left:
        size = min(left, chunk)
        counts += np.bincount(rng.choice(len(arcs), size=size, p=p), minlength=len(arcs))
        left -= size

    out = WeightedDigraph(n=n, rho=rho)
    for j in np.flatnonzero(counts).tolist():
        key = arcs[j]
        out.weights[key] = out.weights.get(key, 0.0) + counts[j] / (rho * p[j])
    return out


def connectivity_class(x: float) -> int:
    """Index ``i`` with ``2**(i-1) <= x < 2**i``."""
    if x < 1:
        raise ValueError("connectivity parameters must be at least 1")
    if isinstance(x, int):
        return x.bit_length()
    return math.frexp(x)[1]


def connectivity_classes(lam: Sequence[float]) -> list[list[int]]:
    """Edge ids by dyadic class; entry ``i - 1`` holds class ``i``.

    The list has ``max(ceil(log2 lambda)) + 1`` entries, some possibly empty.
    """
    if not lam:
        return []
    count = max(math.ceil(math.log2(x)) for x in lam) + 1
    classes: list[list[int]] = [[] for _ in range(count)]
    for e, x in enumerate(lam):
        classes[connectivity_class(x) - 1].append(e)
    return classes


@dataclass
class Decomposition:
    classes: list[list[int]]
    subgraphs: list[list[int]]
    pi: list[float]
    gamma: float


def ni_decomposition(packing: ForestPacking | Sequence[int]) -> Decomposition:
    """Overlapping decomposition from NI indices.

    Subgraph ``i`` is class ``i`` together with class ``i - 1``, and
    ``pi_i = 2**(i-1)``.
    """
    indices = packing.index if isinstance(packing, ForestPacking) else list(packing)
    classes = connectivity_classes(indices)
    subgraphs = []
    for i, cls in enumerate(classes):
        prev = classes[i - 1] if i else []
        subgraphs.append(sorted(prev + cls))
    pi = [float(2**i) for i in range(len(classes))]
    return Decomposition(classes=classes, subgraphs=subgraphs, pi=pi, gamma=2.0)


def double_packing_indices(indices: Sequence[int]) -> list[tuple[int, int]]:
    """NI indices for the graph with every edge doubled: ``(2l - 1, 2l)``."""
    return [(2 * x - 1, 2 * x) for x in indices]
