"""Which facet sets meet in a face of the polytope."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from app.errors import InputError
from app.polytope.models import Polytope

logger = logging.getLogger(__name__)


def spans_simplex(P: Polytope, S: Iterable[int]) -> bool:
    """True iff the facets in ``S`` share a face: a finite vertex, or an ideal vertex without an opposite pair."""
    facets = sorted(set(int(facet) for facet in S))
    if not facets:
        raise InputError("empty_facet_set")
    if any(not 0 <= facet < P.num_facets for facet in facets):
        raise InputError(f"facet_out_of_range:{facets}")

    finite = P.finite_index
    common = finite[facets[0]]
    for facet in facets[1:]:
        if not common:
            break
        common = common & finite[facet]
    if common:
        return True

    ideal = P.ideal_index
    candidates = ideal[facets[0]]
    for facet in facets[1:]:
        if not candidates:
            return False
        candidates = candidates & ideal[facet]
    members = set(facets)
    for vertex_id in sorted(candidates):
        vertex = P.ideal_vertices[vertex_id]
        if all(not (first in members and second in members) for first, second in vertex.pairs):
            return True
    return False


def spanning_sets(P: Polytope, max_size: int | None = None) -> list[list[tuple[int, ...]]]:
    """All facet sets spanning a simplex, grouped by size (index 0 holds singletons), lexicographically sorted.

    Candidates are cliques of the adjacency graph; failing sets are not extended since spanning is
    inherited by subsets.
    """
    limit = P.dim if max_size is None else min(int(max_size), P.dim)
    up = [frozenset(g for g in P.neighbours[f] if g > f) for f in P.facets]
    level: list[tuple[tuple[int, ...], frozenset[int]]] = [
        ((facet,), up[facet]) for facet in P.facets if spans_simplex(P, (facet,))
    ]
    result: list[list[tuple[int, ...]]] = [[simplex for simplex, _ in level]]
    while len(result) < limit and level:
        last = len(result) + 1 == limit
        following: list[tuple[tuple[int, ...], frozenset[int]]] = []
        for simplex, candidates in level:
            for facet in sorted(candidates):
                extended = simplex + (facet,)
                if spans_simplex(P, extended):
                    following.append((extended, frozenset() if last else candidates & up[facet]))
        level = following
        if not level:
            break
        result.append([simplex for simplex, _ in level])
        logger.debug("spanning sets of size %s: %s", len(result), len(level))
    return result


def face_numbers(P: Polytope) -> list[int]:
    """Counts of spanning sets by size, with the empty set first."""
    return [1] + [len(group) for group in spanning_sets(P)]


__all__ = ["face_numbers", "spanning_sets", "spans_simplex"]
