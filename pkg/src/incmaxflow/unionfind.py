"""Growable disjoint-set forest with path compression and union by rank."""

from __future__ import annotations

from typing import Hashable


class DisjointSets:
    """Disjoint sets over elements added one at a time.

    Unlike the usual ``range(n)`` union-find, elements are registered
    explicitly with :meth:`add`, so a structure only pays for the elements
    it actually holds.
    """

    def __init__(self) -> None:
        self._parent: dict[Hashable, Hashable] = {}
        self._rank: dict[Hashable, int] = {}

    def __contains__(self, element: Hashable) -> bool:
        return element in self._parent

    def __len__(self) -> int:
        return len(self._parent)

    def __iter__(self):
        return iter(self._parent)

    def add(self, element: Hashable) -> None:
        """Register ``element`` as a new singleton set."""
        if element in self._parent:
            raise KeyError(f"element {element!r} already present")
        self._parent[element] = element
        self._rank[element] = 0

    def find(self, element: Hashable) -> Hashable:
        """Return the representative of the set holding ``element``.

        Complexity: amortized O(α(n)).
        """
        parent = self._parent
        if element not in parent:
            raise KeyError(f"unknown element {element!r}")
        root = element
        while parent[root] != root:
            root = parent[root]
        while parent[element] != root:
            parent[element], element = root, parent[element]
        return root

    def union(self, first: Hashable, second: Hashable) -> bool:
        """Merge the sets of ``first`` and ``second``.

        Returns False (and changes nothing) if they were already together.
        """
        a = self.find(first)
        b = self.find(second)
        if a == b:
            return False
        rank = self._rank
        if rank[a] < rank[b]:
            a, b = b, a
        self._parent[b] = a
        if rank[a] == rank[b]:
            rank[a] += 1
        return True

    def connected(self, first: Hashable, second: Hashable) -> bool:
        return self.find(first) == self.find(second)
