"""Sufficient conditions for a cusp to see the cohomology, and the cocycles that witness them."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from app.characters.cusps import cusp_loops, evaluate
from app.cubulation.orientation import orientation_cocycle
from app.errors import InputError
from app.game.models import Moves, State
from app.homology.components import UnionFind
from app.polytope.models import Colouring, Polytope


class PairCondition(str, Enum):
    SAME_COLOUR = "Cond1"
    SEPARATED = "Cond2"
    NONE = "None"


class CuspVerdict(str, Enum):
    SURJECTIVE = "Surjective"
    NON_TRIVIAL = "NonTrivial"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CuspConditions:
    ideal_vertex: int
    conditions: tuple[PairCondition, ...]

    @property
    def verdict(self) -> CuspVerdict:
        met = [condition is not PairCondition.NONE for condition in self.conditions]
        if met and all(met):
            return CuspVerdict.SURJECTIVE
        if any(met):
            return CuspVerdict.NON_TRIVIAL
        return CuspVerdict.INCONCLUSIVE


Forests = dict[tuple[int, int], UnionFind]


def _two_colour_components(
    P: Polytope, colouring: Colouring, colours: set[int], forests: Forests | None = None
) -> UnionFind:
    key = (min(colours), max(colours))
    if forests is not None and key in forests:
        return forests[key]
    members = [facet for facet, colour in enumerate(colouring.colours) if colour in colours]
    forest = UnionFind(members)
    member_set = set(members)
    for a, b in P.adjacency:
        if a in member_set and b in member_set:
            forest.union(a, b)
    if forests is not None:
        forests[key] = forest
    return forest


def pair_condition(
    P: Polytope, colouring: Colouring, pair: tuple[int, int], forests: Forests | None = None
) -> PairCondition:
    first, second = pair
    colour_a, colour_b = colouring.colour(first), colouring.colour(second)
    if colour_a == colour_b:
        return PairCondition.SAME_COLOUR
    forest = _two_colour_components(P, colouring, {colour_a, colour_b}, forests)
    if not forest.connected(first, second):
        return PairCondition.SEPARATED
    return PairCondition.NONE


def surjectivity_conditions(
    P: Polytope, colouring: Colouring, vertex_id: int, forests: Forests | None = None
) -> CuspConditions:
    if not 0 <= int(vertex_id) < len(P.ideal_vertices):
        raise InputError(f"invalid_ideal_vertex:{vertex_id}")
    vertex = P.ideal_vertices[int(vertex_id)]
    return CuspConditions(int(vertex_id), tuple(pair_condition(P, colouring, pair, forests) for pair in vertex.pairs))


def all_surjectivity_conditions(
    P: Polytope, colouring: Colouring, vertex_ids: Iterable[int] | None = None
) -> list[CuspConditions]:
    """Conditions for many ideal vertices, sharing the two-colour component forests."""
    forests: Forests = {}
    chosen = range(len(P.ideal_vertices)) if vertex_ids is None else sorted(set(int(v) for v in vertex_ids))
    return [surjectivity_conditions(P, colouring, vertex_id, forests) for vertex_id in chosen]


@dataclass(frozen=True)
class CaseConstruction:
    pair_index: int
    condition: PairCondition
    state: State
    moves: Moves


def case_cocycle(
    P: Polytope, colouring: Colouring, vertex_id: int, pair_index: int, forests: Forests | None = None
) -> CaseConstruction:
    """State and moves whose unit cocycle is nonzero on one cusp loop only.

    Same colour: discrete moves, the pair gets opposite statuses, every other facet I.
    Separated: the pair's two colours form one block; the component of the first facet in the
    two-coloured subset gets O, everything else I.
    """
    conditions = surjectivity_conditions(P, colouring, vertex_id, forests)
    if not 0 <= pair_index < len(conditions.conditions):
        raise InputError(f"invalid_pair_index:{pair_index}")
    condition = conditions.conditions[pair_index]
    first, second = P.ideal_vertices[int(vertex_id)].pairs[pair_index]
    outward = [False] * P.num_facets
    c = colouring.palette_size
    if condition is PairCondition.SAME_COLOUR:
        outward[first] = True
        moves = Moves.discrete(c)
    elif condition is PairCondition.SEPARATED:
        colour_a, colour_b = colouring.colour(first), colouring.colour(second)
        forest = _two_colour_components(P, colouring, {colour_a, colour_b}, forests)
        root = forest.find(first)
        for facet in forest.parents:
            if forest.find(facet) == root:
                outward[facet] = True
        others = [(colour,) for colour in range(1, c + 1) if colour not in (colour_a, colour_b)]
        moves = Moves.build([(colour_a, colour_b), *others])
    else:
        raise InputError(f"pair_meets_no_condition:{pair_index}")
    return CaseConstruction(pair_index, condition, State(tuple(outward)), moves)


def iota_star_matrix(
    P: Polytope, colouring: Colouring, vertex_id: int, base: int, forests: Forests | None = None
) -> list[list[Fraction]]:
    """Row j: the case cocycle of pair j evaluated on every loop; rows of unmet pairs are zero."""
    torus = cusp_loops(P, colouring, vertex_id, base)
    if forests is None:
        forests = {}
    conditions = surjectivity_conditions(P, colouring, vertex_id, forests)
    matrix = []
    for index, condition in enumerate(conditions.conditions):
        if condition is PairCondition.NONE:
            matrix.append([Fraction(0)] * torus.rank)
            continue
        construction = case_cocycle(P, colouring, vertex_id, index, forests)
        z = orientation_cocycle(colouring, construction.state, construction.moves)
        matrix.append([evaluate(z, loop) for loop in torus.loops])
    return matrix


__all__ = [
    "CaseConstruction",
    "CuspConditions",
    "CuspVerdict",
    "PairCondition",
    "all_surjectivity_conditions",
    "case_cocycle",
    "iota_star_matrix",
    "pair_condition",
    "surjectivity_conditions",
]
