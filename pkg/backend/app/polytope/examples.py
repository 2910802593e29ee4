"""Small reference polytopes used for cross-checks."""

from __future__ import annotations

from app.errors import InputError
from app.polytope.models import Colouring, Polytope


def square_polytope() -> Polytope:
    facets = 4
    adjacency = [(i, (i + 1) % facets) for i in range(facets)]
    return Polytope.build(2, facets, adjacency, adjacency)


def square_colouring() -> Colouring:
    return Colouring.build((1, 2, 1, 2), palette_size=2)


def polygon_with_ideal_vertex(n: int) -> Polytope:
    """The 2n-gon with 2n-1 finite vertices; sides 0 and 2n-1 meet at the ideal vertex."""
    if n < 2:
        raise InputError(f"polygon_needs_n_at_least_2:{n}")
    facets = 2 * n
    adjacency = [(i, i + 1) for i in range(facets - 1)]
    return Polytope.build(2, facets, adjacency, adjacency, [((0, facets - 1),)])


def polygon_colouring(n: int) -> Colouring:
    return Colouring.build(tuple(1 + i % 2 for i in range(2 * n)), palette_size=2)


def cube_polytope() -> Polytope:
    """The 3-cube; facets 2i and 2i+1 are opposite."""
    adjacency = [(a, b) for a in range(6) for b in range(a + 1, 6) if a // 2 != b // 2]
    finite = [(x, 2 + y, 4 + z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    return Polytope.build(3, 6, adjacency, finite)


def cube_colouring() -> Colouring:
    return Colouring.build((1, 1, 2, 2, 3, 3), palette_size=3)


def pyramid_polytope() -> Polytope:
    """Square pyramid with an ideal apex: base 0, sides 1..4 around it, sides 1,3 and 2,4 opposite at the apex."""
    sides = (1, 2, 3, 4)
    adjacency = [(0, side) for side in sides] + [(1, 2), (2, 3), (3, 4), (4, 1)]
    finite = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1)]
    return Polytope.build(3, 5, adjacency, finite, [((1, 3), (2, 4))])


def pyramid_colouring(distinct_sides: bool = False) -> Colouring:
    """Opposite sides share a colour unless ``distinct_sides``, in which case every facet has its own."""
    if distinct_sides:
        return Colouring.build((1, 2, 3, 4, 5), palette_size=5)
    return Colouring.build((1, 2, 3, 2, 3), palette_size=3)


__all__ = [
    "cube_colouring",
    "cube_polytope",
    "polygon_colouring",
    "polygon_with_ideal_vertex",
    "pyramid_colouring",
    "pyramid_polytope",
    "square_colouring",
    "square_polytope",
]
