"""Greedy elementary collapses."""

from __future__ import annotations

import logging
from collections import deque
from enum import Enum

from app.errors import InputError
from app.homology.simplicial import SimplicialComplex

logger = logging.getLogger(__name__)


class Certificate(str, Enum):
    CERTIFIED = "Certified"
    UNKNOWN = "Unknown"


def _facets(simplex: tuple[int, ...]) -> list[tuple[int, ...]]:
    if len(simplex) < 2:
        return []
    return [simplex[:i] + simplex[i + 1 :] for i in range(len(simplex))]


def collapse(K: SimplicialComplex) -> set[tuple[int, ...]]:
    """Remove free pairs (a face with a single coface, that coface maximal) until none is left."""
    alive: set[tuple[int, ...]] = set(K.iter_simplices())
    cofaces: dict[tuple[int, ...], set[tuple[int, ...]]] = {simplex: set() for simplex in alive}
    for simplex in alive:
        for facet in _facets(simplex):
            cofaces[facet].add(simplex)

    queue = deque(sorted((s for s in alive if len(cofaces[s]) == 1), key=lambda s: (len(s), s)))

    def release(face: tuple[int, ...], removed: tuple[int, ...]) -> None:
        cofaces[face].discard(removed)
        if face not in alive:
            return
        remaining = len(cofaces[face])
        if remaining == 1:
            queue.append(face)
        elif remaining == 0:
            queue.extend(sub for sub in _facets(face) if sub in alive and len(cofaces[sub]) == 1)

    while queue:
        face = queue.popleft()
        if face not in alive or len(cofaces[face]) != 1:
            continue
        (coface,) = cofaces[face]
        if cofaces[coface]:
            continue
        alive.discard(coface)
        alive.discard(face)
        for sub in _facets(coface):
            release(sub, coface)
        for sub in _facets(face):
            release(sub, face)
    return alive


def certify_contractible(K: SimplicialComplex) -> Certificate:
    """Certified when greedy collapsing reaches a single vertex; Unknown is never a disproof."""
    if K.is_empty:
        raise InputError("empty_complex")
    if K.truncated:
        logger.warning("contractibility of a truncated complex is not certified")
        return Certificate.UNKNOWN
    remaining = collapse(K)
    return Certificate.CERTIFIED if len(remaining) == 1 else Certificate.UNKNOWN


__all__ = ["Certificate", "certify_contractible", "collapse"]
