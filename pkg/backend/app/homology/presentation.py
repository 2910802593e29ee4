"""Edge-path group presentations and Tietze simplification."""

from __future__ import annotations

import heapq
import logging
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from app.errors import DimensionBoundError, InputError
from app.homology.collapse import Certificate, collapse
from app.homology.simplicial import SimplicialComplex

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    """Generators are 1..g; a letter -x stands for the inverse of generator x."""

    generators: tuple[int, ...]
    relators: tuple[Word, ...]

    @property
    def is_trivial(self) -> bool:
        return not self.generators


def free_reduce(word) -> Word:
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(word) -> Word:
    reduced = free_reduce(word)
    start, end = 0, len(reduced)
    while end - start >= 2 and reduced[start] == -reduced[end - 1]:
        start += 1
        end -= 1
    return reduced[start:end]


def invert(word) -> Word:
    return tuple(-letter for letter in reversed(word))


def one_skeleton(K: SimplicialComplex) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(int(vertex) for vertex in K.vertices.tolist())
    if K.dimension >= 1:
        graph.add_edges_from(map(tuple, K.simplices[1].tolist()))
    return graph


def edge_path_presentation(K: SimplicialComplex) -> Presentation:
    """Generators are edges outside a BFS spanning tree; each triangle gives one relator."""
    if K.is_empty:
        raise InputError("empty_complex")
    graph = one_skeleton(K)
    if not nx.is_connected(graph):
        raise InputError("disconnected_complex")
    root = min(graph.nodes)
    tree = {tuple(sorted(edge)) for edge in nx.bfs_tree(graph, root).edges()}

    letters: dict[tuple[int, int], int] = {}
    if K.dimension >= 1:
        for edge in map(tuple, K.simplices[1].tolist()):
            if edge not in tree:
                letters[edge] = len(letters) + 1

    relators: list[Word] = []
    if K.dimension >= 2:
        for a, b, c in K.simplices[2].tolist():
            word = [letters.get((a, b), 0), letters.get((b, c), 0), -letters.get((a, c), 0)]
            reduced = cyclic_reduce(letter for letter in word if letter)
            if reduced:
                relators.append(reduced)
    return Presentation(tuple(range(1, len(letters) + 1)), tuple(relators))


def simplify(presentation: Presentation, budget: int = 10_000) -> tuple[Presentation, int]:
    """Eliminate generators occurring once in some relator, shortest relator first.

    Returns the simplified presentation and the number of eliminations spent.
    """
    relators: dict[int, Word] = {}
    occurrences: dict[int, set[int]] = {generator: set() for generator in presentation.generators}
    heap: list[tuple[int, int]] = []

    def store(relator_id: int, word: Word) -> None:
        for letter in set(abs(letter) for letter in relators.get(relator_id, ())):
            occurrences[letter].discard(relator_id)
        if word:
            relators[relator_id] = word
            for letter in word:
                occurrences[abs(letter)].add(relator_id)
            heapq.heappush(heap, (len(word), relator_id))
        else:
            relators.pop(relator_id, None)

    for relator_id, word in enumerate(presentation.relators):
        store(relator_id, cyclic_reduce(word))

    alive = set(presentation.generators)
    moves = 0
    while heap and moves < budget:
        length, relator_id = heapq.heappop(heap)
        word = relators.get(relator_id)
        if word is None or len(word) != length:
            continue
        counts = Counter(abs(letter) for letter in word)
        single = [generator for generator, count in counts.items() if count == 1]
        if not single:
            continue
        generator = min(single)
        position = next(i for i, letter in enumerate(word) if abs(letter) == generator)
        rotated = word[position + 1 :] + word[:position]
        # word ~ g^e * rotated, so g^e = rotated^-1
        replacement = invert(rotated) if word[position] > 0 else rotated
        store(relator_id, ())
        for other in sorted(occurrences[generator]):
            substituted: list[int] = []
            for letter in relators[other]:
                if letter == generator:
                    substituted.extend(replacement)
                elif letter == -generator:
                    substituted.extend(invert(replacement))
                else:
                    substituted.append(letter)
            store(other, cyclic_reduce(substituted))
        del occurrences[generator]
        alive.discard(generator)
        moves += 1

    result = Presentation(tuple(sorted(alive)), tuple(relators[key] for key in sorted(relators)))
    return result, moves


def certify_simply_connected(K: SimplicialComplex, budget: int = 10_000) -> tuple[Certificate, str]:
    """Certificate plus the method that produced it ("collapse" or "presentation")."""
    if K.is_empty:
        raise InputError("empty_complex")
    if K.max_dim is not None and K.max_dim < 2:
        raise DimensionBoundError("simple connectivity needs the 2-skeleton")
    if not nx.is_connected(one_skeleton(K)):
        raise InputError("disconnected_complex")
    if len(collapse(K)) == 1:
        return Certificate.CERTIFIED, "collapse"
    simplified, moves = simplify(edge_path_presentation(K), budget=budget)
    if simplified.is_trivial:
        return Certificate.CERTIFIED, "presentation"
    logger.debug(
        "presentation left %s generators after %s eliminations",
        len(simplified.generators),
        moves,
    )
    return Certificate.UNKNOWN, "presentation"


__all__ = [
    "Presentation",
    "certify_simply_connected",
    "cyclic_reduce",
    "edge_path_presentation",
    "free_reduce",
    "invert",
    "one_skeleton",
    "simplify",
]
