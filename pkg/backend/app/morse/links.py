"""The vertex link of the cubulation and its ascending and descending parts."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from app.game.models import Moves, State
from app.game.status import status_matrix
from app.homology.simplicial import SimplicialComplex, restrict_to_mask
from app.polytope.faces import spanning_sets
from app.polytope.models import Colouring, Polytope


def nerve(P: Polytope, max_dim: int | None = None) -> SimplicialComplex:
    """Simplicial complex on the facets whose simplices are the spanning facet sets.

    With ``max_dim`` only simplices up to that dimension are generated.
    """
    max_size = None if max_dim is None else int(max_dim) + 1
    groups = spanning_sets(P, max_size)
    layers = tuple(
        np.asarray(group, dtype=np.int64).reshape(len(group), size + 1) for size, group in enumerate(groups) if group
    )
    cut = max_dim if max_dim is not None and max_dim < P.dim - 1 else None
    return SimplicialComplex(layers, cut)


def outward_mask(colouring: Colouring, state: State, moves: Moves, vertex: int) -> np.ndarray:
    return status_matrix(colouring, state, moves, [int(vertex)])[0]


def ascending_link(L: SimplicialComplex, colouring: Colouring, state: State, moves: Moves, vertex: int) -> SimplicialComplex:
    """Full subcomplex on facets with status O at ``vertex`` (outgoing edges)."""
    return restrict_to_mask(L, outward_mask(colouring, state, moves, vertex))


def descending_link(L: SimplicialComplex, colouring: Colouring, state: State, moves: Moves, vertex: int) -> SimplicialComplex:
    """Full subcomplex on facets with status I at ``vertex`` (incoming edges)."""
    return restrict_to_mask(L, ~outward_mask(colouring, state, moves, vertex))


@dataclass(frozen=True)
class StatusPattern:
    outward: tuple[bool, ...]
    count: int
    vertex: int

    @property
    def inward(self) -> tuple[bool, ...]:
        return tuple(not value for value in self.outward)


def status_patterns(colouring: Colouring, state: State, moves: Moves) -> list[StatusPattern]:
    """Distinct O-sets over all cubulation vertices with their multiplicities and first vertex."""
    vertices = np.arange(1 << colouring.palette_size, dtype=np.int64)
    matrix = status_matrix(colouring, state, moves, vertices)
    unique, first, counts = np.unique(matrix, axis=0, return_index=True, return_counts=True)
    patterns = [
        StatusPattern(tuple(bool(value) for value in row), int(count), int(vertex))
        for row, vertex, count in zip(unique.tolist(), first.tolist(), counts.tolist(), strict=True)
    ]
    return sorted(patterns, key=lambda pattern: (sum(pattern.outward), pattern.outward))


__all__ = ["StatusPattern", "ascending_link", "descending_link", "nerve", "outward_mask", "status_patterns"]
