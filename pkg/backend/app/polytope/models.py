"""Combinatorial data of right-angled polytopes and their colourings."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class IdealVertex:
    """Ideal vertex given by the opposite facet pairs of its cube link."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def facets(self) -> tuple[int, ...]:
        return tuple(facet for pair in self.pairs for facet in pair)

    def partner(self, facet: int) -> int | None:
        for first, second in self.pairs:
            if facet == first:
                return second
            if facet == second:
                return first
        return None


@dataclass(frozen=True)
class Polytope:
    dim: int
    num_facets: int
    adjacency: frozenset[tuple[int, int]]
    finite_vertices: tuple[tuple[int, ...], ...]
    ideal_vertices: tuple[IdealVertex, ...] = field(default_factory=tuple)

    @classmethod
    def build(
        cls,
        dim: int,
        num_facets: int,
        adjacency,
        finite_vertices,
        ideal_vertices=(),
    ) -> "Polytope":
        """Normalize loose input (lists, unordered pairs) into the canonical frozen form."""
        pairs = frozenset(_edge(int(a), int(b)) for a, b in adjacency)
        finite = tuple(tuple(sorted(int(f) for f in vertex)) for vertex in finite_vertices)
        ideal = tuple(
            vertex if isinstance(vertex, IdealVertex) else IdealVertex(tuple((int(a), int(b)) for a, b in vertex))
            for vertex in ideal_vertices
        )
        return cls(dim=int(dim), num_facets=int(num_facets), adjacency=pairs, finite_vertices=finite, ideal_vertices=ideal)

    @property
    def facets(self) -> range:
        return range(self.num_facets)

    def adjacent(self, a: int, b: int) -> bool:
        return _edge(a, b) in self.adjacency

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        table: list[set[int]] = [set() for _ in range(self.num_facets)]
        for a, b in self.adjacency:
            if 0 <= a < self.num_facets and 0 <= b < self.num_facets:
                table[a].add(b)
                table[b].add(a)
        return tuple(frozenset(items) for items in table)

    @cached_property
    def finite_index(self) -> tuple[frozenset[int], ...]:
        """Per facet, the ids of finite vertices containing it."""
        table: list[set[int]] = [set() for _ in range(self.num_facets)]
        for vertex_id, vertex in enumerate(self.finite_vertices):
            for facet in vertex:
                if 0 <= facet < self.num_facets:
                    table[facet].add(vertex_id)
        return tuple(frozenset(items) for items in table)

    @cached_property
    def ideal_index(self) -> tuple[frozenset[int], ...]:
        """Per facet, the ids of ideal vertices whose link contains it."""
        table: list[set[int]] = [set() for _ in range(self.num_facets)]
        for vertex_id, vertex in enumerate(self.ideal_vertices):
            for facet in vertex.facets:
                if 0 <= facet < self.num_facets:
                    table[facet].add(vertex_id)
        return tuple(frozenset(items) for items in table)


@dataclass(frozen=True)
class Colouring:
    palette_size: int
    colours: tuple[int, ...]

    @classmethod
    def build(cls, colours, palette_size: int | None = None) -> "Colouring":
        values = tuple(int(value) for value in colours)
        size = int(palette_size) if palette_size is not None else max(values, default=0)
        return cls(palette_size=size, colours=values)

    def colour(self, facet: int) -> int:
        return self.colours[facet]

    def bit(self, facet: int) -> int:
        """Generator of Z_2^c crossed by the edge dual to ``facet`` (colour i is bit i-1)."""
        return 1 << (self.colours[facet] - 1)

    def colour_class(self, colour: int) -> tuple[int, ...]:
        return tuple(facet for facet, value in enumerate(self.colours) if value == colour)


@dataclass
class ValidationReport:
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        self.violations.append(message)

    def as_dict(self) -> dict:
        return {"checked": self.checked, "violations": list(self.violations), "is_valid": self.is_valid}


__all__ = ["Colouring", "IdealVertex", "Polytope", "ValidationReport"]
