"""Sampling edges with probability proportional to their inverse NI index.

Each edge is appended together with the running total of the weights
before it. Since totals only grow, the table stays sorted and a predecessor
search over it inverts the cumulative distribution.
"""

from __future__ import annotations

import bisect
from fractions import Fraction
from typing import Hashable

import numpy as np

from .nipacking import ForestPacking


class CumulativeIndex:
    """Append-only table of ``(key, prefix)`` with strictly increasing prefixes.

    With ``exact=True`` all arithmetic uses :class:`fractions.Fraction`.
    """

    def __init__(self, exact: bool = False) -> None:
        self.exact = exact
        self.keys: list[Hashable] = []
        self.prefixes: list = []
        self.weights: list = []
        self.total = Fraction(0) if exact else 0.0

    def __len__(self) -> int:
        return len(self.keys)

    def append(self, key: Hashable, weight) -> None:
        weight = Fraction(weight) if self.exact else float(weight)
        if weight <= 0:
            raise ValueError("weights must be positive")
        self.keys.append(key)
        self.prefixes.append(self.total)
        self.weights.append(weight)
        self.total = self.total + weight

    def search(self, z) -> Hashable:
        """Key of the last entry whose prefix is ``<= z``."""
        if not self.keys:
            raise LookupError("empty index")
        if z < 0:
            raise ValueError("search value must be non-negative")
        i = bisect.bisect_right(self.prefixes, z) - 1
        return self.keys[i]

    def sample(self, rng: np.random.Generator) -> Hashable:
        """Key drawn with probability proportional to its weight."""
        if not self.keys:
            raise LookupError("cannot sample from an empty index")
        u = rng.random()
        return self.search(self.total * (Fraction(u) if self.exact else u))

    def probabilities(self) -> np.ndarray:
        w = np.array([float(x) for x in self.weights], dtype=float)
        return w / w.sum()


class NISampler:
    """Edge sampler over an incremental NI packing.

    Edge ids are assigned in insertion order starting from 0.
    """

    def __init__(self, exact: bool = False, check: bool = False) -> None:
        self.packing = ForestPacking(check=check)
        self.table = CumulativeIndex(exact=exact)

    def __len__(self) -> int:
        return len(self.table)

    @property
    def total(self):
        """Total sampling mass, the sum of inverse NI indices."""
        return self.table.total

    def insert(self, u: int, v: int) -> int:
        ell = self.packing.insert(u, v)
        weight = Fraction(1, ell) if self.table.exact else 1.0 / ell
        self.table.append(len(self.table), weight)
        return ell

    def draw(self, z) -> int:
        """Edge selected by the point ``z`` in ``[0, total]``."""
        return self.table.search(z)

    def sample(self, rng: np.random.Generator) -> int:
        return self.table.sample(rng)

    def sample_counts(self, rng: np.random.Generator, draws: int) -> np.ndarray:
        """Per-edge counts of ``draws`` independent samples.

        Same joint distribution as calling :meth:`sample` ``draws`` times and
        tallying, but costs O(m) instead of O(draws log m).
        """
        if not len(self.table):
            raise LookupError("cannot sample from an empty sampler")
        return rng.multinomial(draws, self.table.probabilities())
