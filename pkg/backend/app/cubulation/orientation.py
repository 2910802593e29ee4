"""Edge orientations from a state and moves, and the integer 1-cochains they define.

Every cochain here answers ``edge_value(vertex, facet)``: its value on the edge dual to ``facet`` at
``vertex``, traversed away from ``vertex``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from app.cubulation.complex import CubeComplex, Orientation
from app.errors import BadPairPresent, InputError, NonCocycleError
from app.game.models import Moves, State
from app.game.squares import classify_all
from app.game.status import is_outward, status_matrix
from app.polytope.models import Colouring

logger = logging.getLogger(__name__)


def orient(C: CubeComplex, state: State, moves: Moves) -> CubeComplex:
    if len(state.outward) != C.polytope.num_facets:
        raise InputError(f"state_size_mismatch:{len(state.outward)}")
    return replace(C, orientation=Orientation(state, moves))


def edge_directions(C: CubeComplex) -> np.ndarray:
    """True for each base edge pointing from its lower to its upper vertex (status O at the lower end)."""
    if C.orientation is None:
        raise InputError("complex_not_oriented")
    lowers, _, facets = C.edge_endpoints()
    state, moves = C.orientation.state, C.orientation.moves
    if len(lowers) == 0:
        return np.zeros(0, dtype=bool)
    matrix = status_matrix(C.colouring, state, moves, np.arange(1 << C.palette_size, dtype=np.int64))
    return matrix[lowers, facets]


@dataclass(frozen=True, eq=False)
class ArrayCochain:
    """Values on the base edges of a built complex, for the lower-to-upper direction."""

    complex: CubeComplex
    values: np.ndarray

    def edge_value(self, vertex: int, facet: int) -> int:
        value = int(self.values[self.complex.edge_index(vertex, facet)])
        return value if not int(vertex) & self.complex.colouring.bit(facet) else -value

    def coboundary(self) -> np.ndarray:
        """Values of the coboundary on every square."""
        return np.asarray(self.complex.boundary(2).T @ self.values, dtype=np.int64).ravel()


@dataclass(frozen=True)
class OrientationCocycle:
    """Unit cocycle of an orientation, evaluated lazily; usable when the complex is too large to build."""

    colouring: Colouring
    state: State
    moves: Moves

    def edge_value(self, vertex: int, facet: int) -> int:
        return 1 if is_outward(self.colouring, self.state, self.moves, vertex, facet) else -1


def orientation_cocycle(colouring: Colouring, state: State, moves: Moves) -> OrientationCocycle:
    return OrientationCocycle(colouring, state, moves)


def cocycle(C: CubeComplex) -> ArrayCochain:
    """Unit value along each oriented edge; refused when a bad pair makes it fail to close up."""
    if C.orientation is None:
        raise InputError("complex_not_oriented")
    state, moves = C.orientation.state, C.orientation.moves
    report = classify_all(C.polytope, C.colouring, state, moves)
    if report.bad_pairs:
        raise BadPairPresent(report.bad_pairs[0])
    values = np.where(edge_directions(C), 1, -1).astype(np.int64)
    cochain = ArrayCochain(C, values)
    if C.top_dim >= 2:
        if np.any(cochain.coboundary()):
            raise NonCocycleError("coboundary_nonzero_on_square")
    else:
        logger.warning("no squares built; coboundary not verified")
    return cochain


__all__ = [
    "ArrayCochain",
    "OrientationCocycle",
    "cocycle",
    "edge_directions",
    "orient",
    "orientation_cocycle",
]
