"""Simplicial complexes stored as lexicographically sorted vertex arrays per dimension."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

import numpy as np


def _as_array(rows: Iterable[tuple[int, ...]], width: int) -> np.ndarray:
    ordered = sorted(rows)
    if not ordered:
        return np.zeros((0, width), dtype=np.int64)
    return np.asarray(ordered, dtype=np.int64).reshape(len(ordered), width)


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """``simplices[d]`` holds the d-simplices, one sorted row of vertex labels each.

    ``max_dim`` is set when only faces up to that dimension were generated; such a complex is a
    skeleton of the intended one and its top homology is not meaningful.
    """

    simplices: tuple[np.ndarray, ...]
    max_dim: int | None = None

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]], max_dim: int | None = None) -> "SimplicialComplex":
        """Downward closure of the given simplices, optionally cut at ``max_dim``."""
        layers: list[set[tuple[int, ...]]] = []
        for simplex in simplices:
            vertices = tuple(sorted(set(int(vertex) for vertex in simplex)))
            top = len(vertices) if max_dim is None else min(len(vertices), max_dim + 1)
            for size in range(1, top + 1):
                while len(layers) < size:
                    layers.append(set())
                layers[size - 1].update(combinations(vertices, size))
        return cls(tuple(_as_array(layer, d + 1) for d, layer in enumerate(layers)), max_dim)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def vertices(self) -> np.ndarray:
        if not self.simplices:
            return np.zeros(0, dtype=np.int64)
        return self.simplices[0][:, 0]

    @property
    def is_empty(self) -> bool:
        return not self.simplices or len(self.simplices[0]) == 0

    @property
    def truncated(self) -> bool:
        return self.max_dim is not None and self.dimension >= self.max_dim

    def count(self, d: int) -> int:
        return len(self.simplices[d]) if 0 <= d < len(self.simplices) else 0

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.simplices)

    def iter_simplices(self):
        for layer in self.simplices:
            for row in layer.tolist():
                yield tuple(row)

    def skeleton(self, k: int) -> "SimplicialComplex":
        if len(self.simplices) <= k + 1:
            return self
        return SimplicialComplex(self.simplices[: k + 1], k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if len(self.simplices) != len(other.simplices):
            return False
        return all(np.array_equal(a, b) for a, b in zip(self.simplices, other.simplices, strict=True))

    __hash__ = None  # type: ignore[assignment]


def full_subcomplex(K: SimplicialComplex, vertex_subset: Iterable[int]) -> SimplicialComplex:
    """Simplices of K all of whose vertices lie in the subset."""
    wanted = np.fromiter((int(vertex) for vertex in vertex_subset), dtype=np.int64)
    if K.is_empty or wanted.size == 0:
        return SimplicialComplex((), K.max_dim)
    top = int(max(int(K.vertices.max()), int(wanted.max())))
    member = np.zeros(top + 1, dtype=bool)
    member[wanted[wanted >= 0]] = True
    return restrict_to_mask(K, member)


def restrict_to_mask(K: SimplicialComplex, member: np.ndarray) -> SimplicialComplex:
    """Full subcomplex on vertices whose label indexes a True entry of ``member``."""
    layers: list[np.ndarray] = []
    for layer in K.simplices:
        kept = layer[member[layer].all(axis=1)]
        if len(kept) == 0:
            break
        layers.append(kept)
    return SimplicialComplex(tuple(layers), K.max_dim)


__all__ = ["SimplicialComplex", "full_subcomplex", "restrict_to_mask"]
