"""Facet statuses at cubulation vertices.

A vertex of the cubulation is a bitmask over colours (colour i is bit i-1). The status of a facet at
vertex v is its base status flipped once per set bit of v lying in the move block of its colour.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

import numpy as np

from app.game.models import Moves, State, Status
from app.polytope.gosset import halfspace_statuses
from app.polytope.models import Colouring


@lru_cache(maxsize=64)
def facet_flip_masks(colouring: Colouring, moves: Moves) -> np.ndarray:
    """Per facet, the vertex bits that flip its status."""
    masks = moves.colour_masks(colouring.palette_size)
    table = np.array([masks[colour - 1] for colour in colouring.colours], dtype=np.int64)
    table.setflags(write=False)
    return table


def parity(values: np.ndarray) -> np.ndarray:
    folded = np.asarray(values, dtype=np.uint64).copy()
    for shift in (32, 16, 8, 4, 2, 1):
        folded ^= folded >> np.uint64(shift)
    return (folded & np.uint64(1)).astype(bool)


def is_outward(colouring: Colouring, state: State, moves: Moves, vertex: int, facet: int) -> bool:
    flips = (int(vertex) & int(facet_flip_masks(colouring, moves)[facet])).bit_count() & 1
    return bool(state.outward[facet]) ^ bool(flips)


def status_at(colouring: Colouring, state: State, moves: Moves, vertex: int, facet: int) -> Status:
    return Status.O if is_outward(colouring, state, moves, vertex, facet) else Status.I


def status_matrix(colouring: Colouring, state: State, moves: Moves, vertices: Iterable[int]) -> np.ndarray:
    """Boolean matrix, one row per vertex, True where the facet has status O."""
    rows = np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices, dtype=np.int64)
    masks = facet_flip_masks(colouring, moves)
    base = np.asarray(state.outward, dtype=bool)
    return parity(rows[:, None] & masks[None, :]) ^ base[None, :]


def inductive_status(colouring: Colouring, state: State, moves: Moves, path: Sequence[int]) -> list[tuple[bool, ...]]:
    """Statuses along a walk from vertex 0 that crosses edges of the given colours, one flip rule per step."""
    current = list(state.outward)
    history = [tuple(current)]
    for crossed in path:
        block = moves.blocks[moves.block_of(int(crossed))]
        for facet, colour in enumerate(colouring.colours):
            if colour in block:
                current[facet] = not current[facet]
        history.append(tuple(current))
    return history


def is_balanced(colouring: Colouring, state: State) -> bool:
    """Each colour class has as many O facets as I facets."""
    balance = [0] * (colouring.palette_size + 1)
    for facet, colour in enumerate(colouring.colours):
        balance[colour] += 1 if state.outward[facet] else -1
    return not any(balance)


def halfspace_state(direction: tuple[int, ...] = (1, 2, 4, 8, 16, 32, 64, 128)) -> State:
    """Balanced P8 state: O on minimal vectors pairing positively with a generic direction."""
    return State(halfspace_statuses(direction))


__all__ = [
    "facet_flip_masks",
    "halfspace_state",
    "inductive_status",
    "is_balanced",
    "is_outward",
    "parity",
    "status_at",
    "status_matrix",
]
