"""Finite cyclic covers defined by an integer cocycle."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from app.cubulation.complex import CubeComplex, chain_complex, euler_characteristic, with_lift
from app.cubulation.orientation import ArrayCochain
from app.errors import InputError, NonCocycleError
from app.homology.betti import betti

logger = logging.getLogger(__name__)


def cyclic_cover(C: CubeComplex, z: ArrayCochain, ell: int) -> CubeComplex:
    """The l-fold cover: vertices (v, j mod l), an edge at sheet j ends at sheet j + z(edge)."""
    if int(ell) < 1:
        raise InputError(f"cover_degree_must_be_positive:{ell}")
    if C.sheets != 1:
        raise InputError("cover_of_cover_not_supported")
    if len(z.values) != C.count(1):
        raise InputError("cochain_not_on_complex")
    if C.top_dim >= 2 and np.any(z.coboundary()):
        raise NonCocycleError("coboundary_nonzero_on_square")
    return with_lift(C, np.asarray(z.values, dtype=np.int64), int(ell))


def deck_shift(C: CubeComplex, k: int, shift: int = 1) -> np.ndarray:
    """Permutation of k-cells moving every cell up ``shift`` sheets."""
    sheets = C.sheets
    indices = np.arange(C.count(k), dtype=np.int64)
    base, sheet = np.divmod(indices, sheets)
    return base * sheets + (sheet + int(shift)) % sheets


@dataclass(frozen=True)
class CoverGrowth:
    ells: tuple[int, ...]
    betti: tuple[tuple[int, ...], ...]
    euler: tuple[int, ...]
    slopes: tuple[float, ...]
    intercepts: tuple[float, ...]

    def rows(self) -> list[dict]:
        return [
            {"ell": ell, "betti": list(values), "euler_characteristic": chi}
            for ell, values, chi in zip(self.ells, self.betti, self.euler, strict=True)
        ]


def cover_growth(C: CubeComplex, z: ArrayCochain, ells: Iterable[int], field: str = "Q") -> CoverGrowth:
    """Betti numbers of the l-fold covers with a least-squares line per degree."""
    degrees = sorted({int(ell) for ell in ells})
    if not degrees:
        raise InputError("no_cover_degrees")
    table, chis = [], []
    for ell in degrees:
        cover = cyclic_cover(C, z, ell)
        table.append(betti(chain_complex(cover), field=field))
        chis.append(euler_characteristic(cover))
        logger.info("cover ell=%s betti=%s chi=%s", ell, table[-1], chis[-1])
    width = max(len(row) for row in table)
    padded = np.array([list(row) + [0] * (width - len(row)) for row in table], dtype=float)
    slopes, intercepts = [], []
    for degree in range(width):
        if len(degrees) > 1:
            slope, intercept = np.polyfit(np.array(degrees, dtype=float), padded[:, degree], 1)
        else:
            slope, intercept = 0.0, float(padded[0, degree])
        slopes.append(float(slope))
        intercepts.append(float(intercept))
    return CoverGrowth(tuple(degrees), tuple(tuple(row) for row in table), tuple(chis), tuple(slopes), tuple(intercepts))


def cover_boundary_components(value_on_cusp: int, ell: int) -> int:
    """Boundary tori above one cusp in the l-fold cover: gcd of the cocycle value and l."""
    return math.gcd(int(value_on_cusp), int(ell))


@dataclass(frozen=True)
class LefschetzRow:
    degree: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def poincare_lefschetz_check(manifold: Sequence[int], boundary: Sequence[int], dim: int) -> list[LefschetzRow]:
    """b_{n-i}(M) <= b_{i-1}(dM) + b_i(M) for every i in 0..n."""

    def at(values: Sequence[int], index: int) -> int:
        return int(values[index]) if 0 <= index < len(values) else 0

    return [
        LefschetzRow(i, at(manifold, dim - i), at(boundary, i - 1) + at(manifold, i)) for i in range(dim + 1)
    ]


__all__ = [
    "CoverGrowth",
    "LefschetzRow",
    "cover_boundary_components",
    "cover_growth",
    "cyclic_cover",
    "deck_shift",
    "poincare_lefschetz_check",
]
