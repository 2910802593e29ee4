"""Ideal-vertex links and cusp statistics of the coloured manifold."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from app.errors import InputError
from app.polytope.models import Colouring, Polytope


@dataclass(frozen=True)
class CuspCount:
    per_vertex: tuple[int, ...]
    total: int


def _ideal_vertex(P: Polytope, vertex_id: int):
    if not 0 <= int(vertex_id) < len(P.ideal_vertices):
        raise InputError(f"invalid_ideal_vertex:{vertex_id}")
    return P.ideal_vertices[int(vertex_id)]


def link_colouring(P: Polytope, colouring: Colouring, vertex_id: int) -> tuple[tuple[int, ...], int]:
    """Colours inherited by the 2(n-1) link facets, in pair order, and the number of distinct ones."""
    vertex = _ideal_vertex(P, vertex_id)
    inherited = tuple(colouring.colour(facet) for facet in vertex.facets)
    return inherited, len(set(inherited))


def link_mask(P: Polytope, colouring: Colouring, vertex_id: int) -> int:
    mask = 0
    for facet in _ideal_vertex(P, vertex_id).facets:
        mask |= colouring.bit(facet)
    return mask


def cusp_count(P: Polytope, colouring: Colouring) -> CuspCount:
    counts = []
    for vertex_id in range(len(P.ideal_vertices)):
        _, distinct = link_colouring(P, colouring, vertex_id)
        counts.append(2 ** (colouring.palette_size - distinct))
    return CuspCount(per_vertex=tuple(counts), total=sum(counts))


def vertex_type_census(P: Polytope, colouring: Colouring) -> dict[int, int]:
    """Number of ideal vertices for each count c' of inherited colours."""
    census = Counter(link_colouring(P, colouring, vertex_id)[1] for vertex_id in range(len(P.ideal_vertices)))
    return dict(sorted(census.items()))


def cusp_bases(P: Polytope, colouring: Colouring, vertex_id: int) -> list[int]:
    """Canonical base vertex of every cusp above an ideal vertex: link colour bits cleared."""
    mask = link_mask(P, colouring, vertex_id)
    free = [bit for bit in range(colouring.palette_size) if not mask >> bit & 1]
    bases = []
    for index in range(1 << len(free)):
        vertex = 0
        for position, bit in enumerate(free):
            if index >> position & 1:
                vertex |= 1 << bit
        bases.append(vertex)
    return sorted(bases)


__all__ = ["CuspCount", "cusp_bases", "cusp_count", "link_colouring", "link_mask", "vertex_type_census"]
