"""Betti numbers over Q and F_2 and integral homology."""

from __future__ import annotations

from dataclasses import dataclass

from app.errors import DimensionBoundError
from app.homology.chains import ChainComplex, simplicial_chain_complex
from app.homology.simplicial import SimplicialComplex
from app.homology.smith import matrix_rank, smith_invariants

FIELDS = ("Q", "Z2")


@dataclass(frozen=True)
class IntegralHomology:
    ranks: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def vanishes(self) -> bool:
        return not any(self.ranks) and not any(self.torsion)


def as_chain_complex(space: SimplicialComplex | ChainComplex) -> ChainComplex:
    if isinstance(space, ChainComplex):
        return space
    return simplicial_chain_complex(space)


def _resolve_degree(chain: ChainComplex, up_to: int | None) -> int:
    limit = chain.top_dim if chain.complete_through is None else chain.complete_through
    if up_to is None:
        return limit
    if chain.complete_through is not None and up_to > chain.complete_through:
        raise DimensionBoundError(f"homology up to {up_to} needs cells through dimension {up_to + 1}")
    return up_to


def _augmented_rank(chain: ChainComplex, d: int, reduced: bool) -> int:
    return 1 if reduced and d == 0 and chain.rank(0) > 0 else 0


def betti(
    space: SimplicialComplex | ChainComplex,
    field: str = "Q",
    up_to: int | None = None,
    reduced: bool = False,
) -> tuple[int, ...]:
    """Betti numbers b_0..b_up_to; reduced numbers drop one from b_0 of a nonempty space."""
    if field not in FIELDS:
        raise ValueError(f"unsupported_field:{field}")
    chain = as_chain_complex(space)
    top = _resolve_degree(chain, up_to)
    ranks = {d: matrix_rank(chain.boundary(d), field) for d in range(1, top + 2)}
    values = []
    for d in range(top + 1):
        incoming = ranks.get(d, 0) + _augmented_rank(chain, d, reduced)
        values.append(chain.rank(d) - incoming - ranks.get(d + 1, 0))
    return tuple(values)


def reduced_betti(space: SimplicialComplex | ChainComplex, field: str = "Q", up_to: int | None = None) -> tuple[int, ...]:
    return betti(space, field=field, up_to=up_to, reduced=True)


def integral_homology(
    space: SimplicialComplex | ChainComplex,
    up_to: int | None = None,
    reduced: bool = False,
) -> IntegralHomology:
    chain = as_chain_complex(space)
    top = _resolve_degree(chain, up_to)
    invariants = {d: smith_invariants(chain.boundary(d)) for d in range(1, top + 2)}
    ranks = []
    torsion = []
    for d in range(top + 1):
        incoming = len(invariants.get(d, ())) + _augmented_rank(chain, d, reduced)
        ranks.append(chain.rank(d) - incoming - len(invariants.get(d + 1, ())))
        torsion.append(tuple(value for value in invariants.get(d + 1, ()) if value > 1))
    return IntegralHomology(tuple(ranks), tuple(torsion))


def euler_characteristic(space: SimplicialComplex | ChainComplex) -> int:
    return as_chain_complex(space).euler_characteristic()


__all__ = [
    "FIELDS",
    "IntegralHomology",
    "as_chain_complex",
    "betti",
    "euler_characteristic",
    "integral_homology",
    "reduced_betti",
]
