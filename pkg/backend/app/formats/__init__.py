from app.formats.convert import (
    character_from_file,
    character_to_file,
    colouring_from_file,
    colouring_to_file,
    gram_from_file,
    gram_to_file,
    moves_from_file,
    moves_to_file,
    polytope_from_file,
    polytope_to_file,
    state_from_file,
    state_to_file,
)
from app.formats.repository import DataRepository
from app.formats.schemas import CharacterFile, ColouringFile, GramFile, MovesFile, PolytopeFile, StateFile

__all__ = [
    "CharacterFile",
    "ColouringFile",
    "DataRepository",
    "GramFile",
    "MovesFile",
    "PolytopeFile",
    "StateFile",
    "character_from_file",
    "character_to_file",
    "colouring_from_file",
    "colouring_to_file",
    "gram_from_file",
    "gram_to_file",
    "moves_from_file",
    "moves_to_file",
    "polytope_from_file",
    "polytope_to_file",
    "state_from_file",
    "state_to_file",
]
