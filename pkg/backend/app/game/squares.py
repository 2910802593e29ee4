"""Very good / good / bad classification of adjacent facet pairs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from app.errors import InputError
from app.game.models import Moves, PairClass, State
from app.polytope.models import Colouring, Polytope


@dataclass(frozen=True)
class GameReport:
    counts: dict[str, int]
    bad_pairs: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    @property
    def coherent(self) -> bool:
        return self.counts.get(PairClass.GOOD.value, 0) == 0 and not self.bad_pairs

    @property
    def cocycle_ok(self) -> bool:
        return not self.bad_pairs

    def as_dict(self) -> dict:
        return {
            "counts": dict(self.counts),
            "bad_pairs": [list(pair) for pair in self.bad_pairs],
            "coherent": self.coherent,
            "cocycle_ok": self.cocycle_ok,
        }


def classify_pair(
    P: Polytope, first: int, second: int, colouring: Colouring, state: State, moves: Moves
) -> PairClass:
    if not P.adjacent(first, second):
        raise InputError(f"facets_not_adjacent:{first},{second}")
    colour_a, colour_b = colouring.colour(first), colouring.colour(second)
    if not moves.same_block(colour_a, colour_b):
        return PairClass.VERY_GOOD
    if state.outward[first] == state.outward[second]:
        return PairClass.GOOD
    return PairClass.BAD


def classify_all(P: Polytope, colouring: Colouring, state: State, moves: Moves) -> GameReport:
    counts: Counter[str] = Counter({item.value: 0 for item in PairClass})
    bad: list[tuple[int, int]] = []
    for first, second in sorted(P.adjacency):
        verdict = classify_pair(P, first, second, colouring, state, moves)
        counts[verdict.value] += 1
        if verdict is PairClass.BAD:
            bad.append((first, second))
    return GameReport(counts=dict(counts), bad_pairs=tuple(bad))


__all__ = ["GameReport", "classify_all", "classify_pair"]
