"""First Betti number of the coloured manifold from colour-selected subgraphs of the nerve."""

from __future__ import annotations

import logging

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from app.errors import ResourceBoundExceeded
from app.polytope.models import Colouring, Polytope
from app.settings import load_settings
from app.worker.pool import ordered_map

logger = logging.getLogger(__name__)

_GRAPH: tuple[np.ndarray, np.ndarray, np.ndarray, int] | None = None


def _install(colour_bits: np.ndarray, first: np.ndarray, second: np.ndarray, num_facets: int) -> None:
    global _GRAPH
    _GRAPH = (colour_bits, first, second, num_facets)


def _reduced_components(omega: int) -> int:
    """Reduced b_0 of the full subcomplex on facets whose colour lies in ``omega``."""
    if _GRAPH is None:
        raise RuntimeError("graph worker not initialised")
    colour_bits, first, second, num_facets = _GRAPH
    inside = (colour_bits & omega) != 0
    count = int(inside.sum())
    if count == 0:
        return 0
    keep = inside[first] & inside[second]
    graph = sparse.coo_matrix(
        (np.ones(int(keep.sum()), dtype=np.int8), (first[keep], second[keep])),
        shape=(num_facets, num_facets),
    )
    components, _ = connected_components(graph, directed=False)
    return int(components) - (num_facets - count) - 1


def _omega_batch(bounds: tuple[int, int]) -> int:
    start, stop = bounds
    return sum(_reduced_components(omega) for omega in range(start, stop))


def choi_park_b1(P: Polytope, colouring: Colouring, jobs: int | None = None, batch: int = 4096) -> int:
    """Sum over nonzero colour subsets of the reduced b_0 of the selected facets' subgraph.

    Only edges of the nerve matter for b_0, and those are the adjacent facet pairs.
    """
    c = colouring.palette_size
    cap = load_settings().max_palette
    if c > cap:
        raise ResourceBoundExceeded(f"2^{c} colour subsets exceed cap 2^{cap}")
    colour_bits = np.array([colouring.bit(facet) for facet in P.facets], dtype=np.int64)
    pairs = np.array(sorted(P.adjacency), dtype=np.int64).reshape(-1, 2)
    initargs = (colour_bits, pairs[:, 0].copy(), pairs[:, 1].copy(), P.num_facets)
    total_subsets = 1 << c
    chunks = [(start, min(start + batch, total_subsets)) for start in range(1, total_subsets, batch)]
    totals = ordered_map(_omega_batch, chunks, jobs=jobs, initializer=_install, initargs=initargs, chunksize=1)
    b1 = int(sum(totals))
    logger.info("b1 from %s colour subsets: %s", total_subsets - 1, b1)
    return b1


__all__ = ["choi_park_b1"]
