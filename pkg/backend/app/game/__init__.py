from app.game.models import Moves, PairClass, State, Status, validate_moves, validate_state
from app.game.squares import GameReport, classify_all, classify_pair
from app.game.status import (
    facet_flip_masks,
    halfspace_state,
    inductive_status,
    is_balanced,
    is_outward,
    parity,
    status_at,
    status_matrix,
)

__all__ = [
    "GameReport",
    "Moves",
    "PairClass",
    "State",
    "Status",
    "classify_all",
    "classify_pair",
    "facet_flip_masks",
    "halfspace_state",
    "inductive_status",
    "is_balanced",
    "is_outward",
    "parity",
    "status_at",
    "status_matrix",
    "validate_moves",
    "validate_state",
]
