"""Conversions between domain objects and their file models."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from app.characters.cusps import CuspTorus, Gram
from app.characters.perturb import Character, CuspKey
from app.formats.schemas import (
    CharacterFile,
    ColouringFile,
    CuspGram,
    CuspValues,
    GramFile,
    IdealVertexRecord,
    MovesFile,
    PolytopeFile,
    RationalPair,
    StateFile,
)
from app.game.models import Moves, State
from app.polytope.models import Colouring, Polytope


def _pair(value: Fraction) -> RationalPair:
    value = Fraction(value)
    return (value.numerator, value.denominator)


def _fraction(pair: RationalPair) -> Fraction:
    return Fraction(int(pair[0]), int(pair[1]))


def polytope_to_file(P: Polytope) -> PolytopeFile:
    return PolytopeFile(
        dim=P.dim,
        num_facets=P.num_facets,
        adjacency=sorted(P.adjacency),
        finite_vertices=[list(vertex) for vertex in P.finite_vertices],
        ideal_vertices=[IdealVertexRecord(pairs=list(vertex.pairs)) for vertex in P.ideal_vertices],
    )


def polytope_from_file(record: PolytopeFile) -> Polytope:
    return Polytope.build(
        dim=record.dim,
        num_facets=record.num_facets,
        adjacency=record.adjacency,
        finite_vertices=record.finite_vertices,
        ideal_vertices=[vertex.pairs for vertex in record.ideal_vertices],
    )


def colouring_to_file(colouring: Colouring) -> ColouringFile:
    return ColouringFile(palette=colouring.palette_size, colours=list(colouring.colours))


def colouring_from_file(record: ColouringFile) -> Colouring:
    return Colouring.build(record.colours, palette_size=record.palette)


def state_to_file(state: State) -> StateFile:
    return StateFile(stati=state.labels())


def state_from_file(record: StateFile) -> State:
    return State.from_labels(record.stati)


def moves_to_file(moves: Moves) -> MovesFile:
    return MovesFile(blocks=[list(block) for block in moves.blocks])


def moves_from_file(record: MovesFile) -> Moves:
    return Moves.build(record.blocks)


def character_to_file(character: Character) -> CharacterFile:
    return CharacterFile(
        cusps=[
            CuspValues(ideal_vertex=key[0], base=key[1], values=[_pair(value) for value in character.on(key)])
            for key in character.keys
        ]
    )


def character_from_file(record: CharacterFile) -> Character:
    return Character.build({(cusp.ideal_vertex, cusp.base): [_fraction(pair) for pair in cusp.values] for cusp in record.cusps})


def gram_to_file(tori: Iterable[CuspTorus]) -> GramFile:
    return GramFile(
        cusps=[
            CuspGram(
                ideal_vertex=torus.ideal_vertex,
                base=torus.base,
                gram=[[_pair(value) for value in row] for row in torus.gram],
            )
            for torus in sorted(tori, key=lambda torus: torus.key)
        ]
    )


def gram_from_file(record: GramFile) -> Mapping[CuspKey, Gram]:
    return {
        (cusp.ideal_vertex, cusp.base): tuple(tuple(_fraction(pair) for pair in row) for row in cusp.gram)
        for cusp in record.cusps
    }


__all__ = [
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
