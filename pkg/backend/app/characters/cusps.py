"""Cusp tori, their edge loops and cocycle evaluation."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from app.errors import InputError, LoopClosureError
from app.polytope.cusps import cusp_bases
from app.polytope.models import Colouring, Polytope

Gram = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class CuspLoop:
    """Closed edge path; each step is (vertex, facet), crossing the facet's edge away from the vertex."""

    pair: tuple[int, int]
    steps: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class CuspTorus:
    ideal_vertex: int
    base: int
    loops: tuple[CuspLoop, ...]
    gram: Gram

    @property
    def key(self) -> tuple[int, int]:
        return (self.ideal_vertex, self.base)

    @property
    def rank(self) -> int:
        return len(self.loops)


def default_gram(loops: Iterable[CuspLoop]) -> Gram:
    """Diagonal metric with each loop as long as its edge count."""
    lengths = [loop.length for loop in loops]
    return tuple(
        tuple(Fraction(length * length) if i == j else Fraction(0) for j in range(len(lengths)))
        for i, length in enumerate(lengths)
    )


def walk_loop(colouring: Colouring, pair: tuple[int, int], base: int) -> CuspLoop:
    """Cross the edges dual to the two facets alternately until back at ``base``."""
    vertex = int(base)
    steps: list[tuple[int, int]] = []
    for step in range(4):
        facet = pair[step % 2]
        steps.append((vertex, facet))
        vertex ^= colouring.bit(facet)
        if vertex == base and len(steps) % 2 == 0:
            return CuspLoop(pair=pair, steps=tuple(steps))
    raise LoopClosureError(f"pair {pair[0]},{pair[1]} from vertex {base}")


def cusp_loops(
    P: Polytope,
    colouring: Colouring,
    vertex_id: int,
    base: int,
    gram: Gram | None = None,
) -> CuspTorus:
    if not 0 <= int(vertex_id) < len(P.ideal_vertices):
        raise InputError(f"invalid_ideal_vertex:{vertex_id}")
    if not 0 <= int(base) < 1 << colouring.palette_size:
        raise InputError(f"vertex_out_of_range:{base}")
    vertex = P.ideal_vertices[int(vertex_id)]
    loops = tuple(walk_loop(colouring, pair, int(base)) for pair in vertex.pairs)
    metric = default_gram(loops) if gram is None else tuple(tuple(Fraction(value) for value in row) for row in gram)
    if len(metric) != len(loops) or any(len(row) != len(loops) for row in metric):
        raise InputError(f"gram_shape_mismatch:{len(metric)}")
    return CuspTorus(ideal_vertex=int(vertex_id), base=int(base), loops=loops, gram=metric)


def cusp_keys(P: Polytope, colouring: Colouring, vertex_ids: Iterable[int] | None = None) -> list[tuple[int, int]]:
    """(ideal vertex, canonical base) for every cusp, the 2^(c-c') lifts of each ideal vertex."""
    chosen = range(len(P.ideal_vertices)) if vertex_ids is None else sorted(set(int(v) for v in vertex_ids))
    return [(vertex_id, base) for vertex_id in chosen for base in cusp_bases(P, colouring, vertex_id)]


def cusp_tori(P: Polytope, colouring: Colouring, vertex_ids: Iterable[int] | None = None) -> list[CuspTorus]:
    """Every cusp above the chosen ideal vertices (all by default), at its canonical base vertex."""
    return [cusp_loops(P, colouring, vertex_id, base) for vertex_id, base in cusp_keys(P, colouring, vertex_ids)]


def evaluate(z, loop: CuspLoop) -> Fraction:
    """Signed sum of the cochain along the loop."""
    return sum((Fraction(z.edge_value(vertex, facet)) for vertex, facet in loop.steps), Fraction(0))


def evaluate_torus(z, torus: CuspTorus) -> tuple[Fraction, ...]:
    return tuple(evaluate(z, loop) for loop in torus.loops)


__all__ = [
    "CuspLoop",
    "CuspTorus",
    "Gram",
    "cusp_keys",
    "cusp_loops",
    "cusp_tori",
    "default_gram",
    "evaluate",
    "evaluate_torus",
    "walk_loop",
]
