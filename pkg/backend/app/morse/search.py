"""Random search for balanced states whose links are all nonempty and connected."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from app.errors import InputError, NoSolutionWithinBound
from app.game.models import Moves, State
from app.game.squares import classify_all
from app.morse.links import nerve, status_patterns
from app.polytope.models import Colouring, Polytope

logger = logging.getLogger(__name__)


@dataclass
class StateSearch:
    state: State
    attempts: int
    coherent_candidates: int
    disconnected: int
    links: int

    @property
    def connected(self) -> bool:
        return self.disconnected == 0

    def as_dict(self) -> dict:
        return {
            "attempts": self.attempts,
            "coherent_candidates": self.coherent_candidates,
            "disconnected_links": self.disconnected,
            "links": self.links,
            "connected": self.connected,
        }


def random_balanced_state(colouring: Colouring, rng: np.random.Generator) -> State:
    """Half of every colour class gets status O."""
    values = np.zeros(len(colouring.colours), dtype=bool)
    members = np.asarray(colouring.colours, dtype=np.int64)
    for colour in range(1, colouring.palette_size + 1):
        facets = np.flatnonzero(members == colour)
        if facets.size % 2:
            raise InputError(f"odd_colour_class:{colour}")
        values[rng.permutation(facets)[: facets.size // 2]] = True
    return State(tuple(bool(value) for value in values.tolist()))


def _adjacency(P: Polytope) -> sparse.csr_matrix:
    edges = nerve(P, max_dim=1).simplices
    rows = edges[1] if len(edges) > 1 else np.zeros((0, 2), dtype=np.int64)
    n = P.num_facets
    data = np.ones(2 * len(rows), dtype=np.int8)
    ends = np.concatenate([rows[:, 0], rows[:, 1]])
    starts = np.concatenate([rows[:, 1], rows[:, 0]])
    return sparse.csr_matrix((data, (starts, ends)), shape=(n, n))


def disconnected_links(P: Polytope, colouring: Colouring, state: State, moves: Moves, graph=None) -> tuple[int, int]:
    """(empty or disconnected links, distinct links) over every ascending and descending link."""
    graph = _adjacency(P) if graph is None else graph
    seen: set[tuple[bool, ...]] = set()
    bad = 0
    for pattern in status_patterns(colouring, state, moves):
        for members in (pattern.outward, pattern.inward):
            if members in seen:
                continue
            seen.add(members)
            index = np.flatnonzero(np.asarray(members, dtype=bool))
            if index.size == 0:
                bad += 1
                continue
            components, _ = connected_components(graph[index][:, index], directed=False)
            if components != 1:
                bad += 1
    return bad, len(seen)


def search_state(
    P: Polytope,
    colouring: Colouring,
    moves: Moves,
    attempts: int = 16,
    seed: int = 0,
) -> StateSearch:
    """Best of ``attempts`` random coherent balanced states, stopping at the first with connected links."""
    if attempts < 1:
        raise InputError(f"invalid_attempts:{attempts}")
    rng = np.random.default_rng(seed)
    graph = _adjacency(P)
    best: StateSearch | None = None
    coherent = 0
    tried = 0
    for tried in range(1, attempts + 1):
        state = random_balanced_state(colouring, rng)
        if not classify_all(P, colouring, state, moves).coherent:
            continue
        coherent += 1
        bad, links = disconnected_links(P, colouring, state, moves, graph)
        logger.info("state attempt %s: %s of %s links disconnected", tried, bad, links)
        if best is None or bad < best.disconnected:
            best = StateSearch(state, tried, coherent, bad, links)
        if bad == 0:
            break
    if best is None:
        raise NoSolutionWithinBound(f"no_coherent_state:{attempts}")
    best.attempts = tried
    best.coherent_candidates = coherent
    return best


__all__ = ["StateSearch", "disconnected_links", "random_balanced_state", "search_state"]
