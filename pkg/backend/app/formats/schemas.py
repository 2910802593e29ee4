"""File models for polytopes, colourings, states, moves, characters and Gram matrices."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator

from app import DATA_FORMAT_VERSION

RationalPair = tuple[int, int]


class VersionedFile(BaseModel):
    format_version: int = DATA_FORMAT_VERSION

    @field_validator("format_version")
    @classmethod
    def _known_version(cls, value: int) -> int:
        if value != DATA_FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {value}, expected {DATA_FORMAT_VERSION}")
        return value


class IdealVertexRecord(BaseModel):
    pairs: list[tuple[int, int]]


class PolytopeFile(VersionedFile):
    dim: int = Field(ge=1)
    num_facets: int = Field(ge=1)
    adjacency: list[tuple[int, int]]
    finite_vertices: list[list[int]]
    ideal_vertices: list[IdealVertexRecord] = Field(default_factory=list)


class ColouringFile(VersionedFile):
    palette: int = Field(ge=1)
    colours: list[int]


class StateFile(VersionedFile):
    stati: list[Literal["I", "O"]]


class MovesFile(VersionedFile):
    blocks: list[list[int]]


class CuspValues(BaseModel):
    ideal_vertex: int = Field(ge=0)
    base: int = Field(ge=0)
    values: list[RationalPair]

    @field_validator("values")
    @classmethod
    def _nonzero_denominators(cls, value: list[RationalPair]) -> list[RationalPair]:
        if any(den == 0 for _, den in value):
            raise ValueError("zero denominator")
        return value


class CharacterFile(VersionedFile):
    cusps: list[CuspValues]


class CuspGram(BaseModel):
    ideal_vertex: int = Field(ge=0)
    base: int = Field(ge=0)
    gram: list[list[RationalPair]]

    @field_validator("gram")
    @classmethod
    def _square_with_nonzero_denominators(cls, value: list[list[RationalPair]]) -> list[list[RationalPair]]:
        if any(len(row) != len(value) for row in value):
            raise ValueError("gram matrix is not square")
        if any(den == 0 for row in value for _, den in row):
            raise ValueError("zero denominator")
        return value


class GramFile(VersionedFile):
    cusps: list[CuspGram]


__all__ = [
    "CharacterFile",
    "ColouringFile",
    "CuspGram",
    "CuspValues",
    "GramFile",
    "IdealVertexRecord",
    "MovesFile",
    "PolytopeFile",
    "RationalPair",
    "StateFile",
    "VersionedFile",
]
