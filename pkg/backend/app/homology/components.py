"""Union-find over integer labels."""

from __future__ import annotations

from collections.abc import Iterable


class UnionFind:
    """Disjoint sets with path compression; counts components as it merges."""

    def __init__(self, elements: Iterable[int]):
        self.parents = {int(element): int(element) for element in elements}
        self.num_components = len(self.parents)

    def find(self, element: int) -> int:
        root = element
        while root != self.parents[root]:
            root = self.parents[root]
        while element != root:
            self.parents[element], element = root, self.parents[element]
        return root

    def union(self, a: int, b: int) -> bool:
        first, second = self.find(a), self.find(b)
        if first == second:
            return False
        if second < first:
            first, second = second, first
        self.parents[second] = first
        self.num_components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def components(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for element in sorted(self.parents):
            groups.setdefault(self.find(element), []).append(element)
        return list(groups.values())


__all__ = ["UnionFind"]
