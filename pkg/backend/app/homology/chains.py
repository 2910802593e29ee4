"""Sparse integer chain complexes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from app.homology.simplicial import SimplicialComplex


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Cell counts per dimension and boundary maps; ``boundaries[d - 1]`` is the map C_d -> C_{d-1}.

    ``complete_through`` is the highest dimension whose homology is fully determined, or None when
    every cell of the space is present.
    """

    ranks: tuple[int, ...]
    boundaries: tuple[sparse.csc_matrix, ...]
    complete_through: int | None = None

    @property
    def top_dim(self) -> int:
        return len(self.ranks) - 1

    def rank(self, d: int) -> int:
        return self.ranks[d] if 0 <= d < len(self.ranks) else 0

    def boundary(self, d: int) -> sparse.csc_matrix:
        if 1 <= d <= len(self.boundaries):
            return self.boundaries[d - 1]
        return sparse.csc_matrix((self.rank(d - 1), self.rank(d)), dtype=np.int64)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * count for d, count in enumerate(self.ranks))

    def boundary_squares_vanish(self) -> bool:
        for d in range(2, len(self.boundaries) + 1):
            product = self.boundary(d - 1) @ self.boundary(d)
            if product.count_nonzero():
                return False
        return True


def _encode(rows: np.ndarray, base: int) -> np.ndarray | None:
    width = rows.shape[1]
    if base**width >= 2**62:
        return None
    keys = np.zeros(len(rows), dtype=np.int64)
    for column in range(width):
        keys = keys * base + rows[:, column]
    return keys


def _face_indices(faces: np.ndarray, targets: np.ndarray, base: int) -> np.ndarray:
    """Row index in ``targets`` (lexicographically sorted) of each row of ``faces``."""
    target_keys = _encode(targets, base)
    face_keys = _encode(faces, base)
    if target_keys is not None and face_keys is not None:
        return np.searchsorted(target_keys, face_keys)
    lookup = {tuple(row): index for index, row in enumerate(targets.tolist())}
    return np.fromiter((lookup[tuple(row)] for row in faces.tolist()), dtype=np.int64, count=len(faces))


def simplicial_chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Boundary matrices with the alternating signs of the sorted vertex order."""
    ranks = tuple(K.f_vector())
    if not ranks:
        return ChainComplex((), (), None)
    vertices = K.vertices
    base = max(len(vertices), 1)
    positions = [np.searchsorted(vertices, layer) for layer in K.simplices]
    boundaries = []
    for d in range(1, len(positions)):
        layer = positions[d]
        count = len(layer)
        rows, cols, data = [], [], []
        for removed in range(d + 1):
            faces = np.delete(layer, removed, axis=1)
            rows.append(_face_indices(faces, positions[d - 1], base))
            cols.append(np.arange(count, dtype=np.int64))
            data.append(np.full(count, -1 if removed % 2 else 1, dtype=np.int64))
        matrix = sparse.csc_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(ranks[d - 1], count),
            dtype=np.int64,
        )
        boundaries.append(matrix)
    complete = K.max_dim - 1 if K.truncated and K.max_dim is not None else None
    return ChainComplex(ranks, tuple(boundaries), complete)


__all__ = ["ChainComplex", "simplicial_chain_complex"]
