"""The 8-dimensional right-angled polytope dual to the Gosset polytope.

Facets are the 240 minimal vectors of E8, stored doubled so every coordinate is an integer.
Two facets meet iff their vectors have inner product 1, finite vertices are the 8-cliques of
that graph, and ideal vertices are the norm-4 lattice vectors w, whose link pairs are {r, w - r}.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from app.polytope.models import Colouring, IdealVertex, Polytope

logger = logging.getLogger(__name__)

DIM = 8
# doubled coordinates: <2r, 2s> = 4 <r, s>
_ADJACENT_PRODUCT = 4
_LINK_PRODUCT = 8


@lru_cache(maxsize=1)
def e8_minimal_vectors() -> np.ndarray:
    """The 240 minimal vectors, doubled, in lexicographic order."""
    rows: list[tuple[int, ...]] = []
    for a, b in combinations(range(DIM), 2):
        for sa, sb in product((2, -2), repeat=2):
            row = [0] * DIM
            row[a], row[b] = sa, sb
            rows.append(tuple(row))
    for signs in product((1, -1), repeat=DIM):
        if signs.count(-1) % 2 == 0:
            rows.append(signs)
    rows.sort()
    vectors = np.array(rows, dtype=np.int64)
    vectors.setflags(write=False)
    return vectors


def _clique_search(upper: list[int], size: int) -> list[tuple[int, ...]]:
    found: list[tuple[int, ...]] = []

    def extend(clique: tuple[int, ...], candidates: int) -> None:
        if len(clique) == size:
            found.append(clique)
            return
        need = size - len(clique)
        while candidates:
            if candidates.bit_count() < need:
                return
            lowest = candidates & -candidates
            facet = lowest.bit_length() - 1
            candidates ^= lowest
            extend(clique + (facet,), candidates & upper[facet])

    for facet, mask in enumerate(upper):
        extend((facet,), mask)
    return found


def _norm_four_vectors(roots: np.ndarray) -> np.ndarray:
    products = roots @ roots.T
    first, second = np.nonzero(np.triu(products == 0))
    sums = roots[first] + roots[second]
    return np.unique(sums, axis=0)


@lru_cache(maxsize=1)
def gosset_p8() -> Polytope:
    roots = e8_minimal_vectors()
    count = len(roots)
    products = roots @ roots.T
    adjacent = products == _ADJACENT_PRODUCT
    first, second = np.nonzero(np.triu(adjacent))
    adjacency = list(zip(first.tolist(), second.tolist(), strict=True))

    upper = [0] * count
    for a, b in adjacency:
        upper[a] |= 1 << b
    finite = _clique_search(upper, DIM)

    index = {tuple(row): i for i, row in enumerate(roots.tolist())}
    ideal: list[IdealVertex] = []
    for w in _norm_four_vectors(roots):
        link = np.nonzero(roots @ w == _LINK_PRODUCT)[0].tolist()
        pairs = set()
        for facet in link:
            partner = index[tuple((w - roots[facet]).tolist())]
            pairs.add((min(facet, partner), max(facet, partner)))
        ideal.append(IdealVertex(tuple(sorted(pairs))))

    logger.info(
        "built P8: facets=%s adjacency=%s finite_vertices=%s ideal_vertices=%s",
        count,
        len(adjacency),
        len(finite),
        len(ideal),
    )
    return Polytope.build(DIM, count, adjacency, finite, ideal)


def _reed_muller_words() -> list[int]:
    """Affine functions on F_2^3 as 8-bit supports over the coordinate labels."""
    words = []
    for u, e in product(range(8), (0, 1)):
        mask = 0
        for x in range(8):
            if (bin(u & x).count("1") + e) % 2:
                mask |= 1 << x
        words.append(mask)
    return words


def frame_colouring() -> Colouring:
    """15-colouring of P8 by mutually orthogonal frames of minimal vectors.

    Coordinates are labelled by F_2^3. Integer vectors supported on {a, b} get colour a xor b;
    half-integer vectors are grouped by the coset of the extended Hamming code containing their
    set of negative coordinates, giving colours 8..15.
    """
    roots = e8_minimal_vectors()
    words = _reed_muller_words()
    cosets: dict[int, int] = {}
    colours: list[int] = []
    for row in roots.tolist():
        support = [i for i, value in enumerate(row) if abs(value) == 2]
        if support:
            colours.append(support[0] ^ support[1])
            continue
        negative = sum(1 << i for i, value in enumerate(row) if value < 0)
        leader = min(negative ^ word for word in words)
        colours.append(-leader - 1)
    for leader in sorted({-value - 1 for value in colours if value < 0}):
        cosets[leader] = 8 + len(cosets)
    resolved = [value if value > 0 else cosets[-value - 1] for value in colours]
    return Colouring.build(resolved, palette_size=15)


def halfspace_statuses(direction: tuple[int, ...] = (1, 2, 4, 8, 16, 32, 64, 128)) -> tuple[bool, ...]:
    """Status O (True) for minimal vectors pairing positively with ``direction``."""
    products = e8_minimal_vectors() @ np.asarray(direction, dtype=np.int64)
    if np.any(products == 0):
        raise ValueError("direction_not_generic")
    return tuple(bool(value > 0) for value in products.tolist())


__all__ = ["e8_minimal_vectors", "frame_colouring", "gosset_p8", "halfspace_statuses"]
