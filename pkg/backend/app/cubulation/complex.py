"""Dual cubulation of the coloured manifold and its cyclic covers.

A k-cube is a pair (S, v): S a spanning set of k facets, v a vertex of Z_2^c with the colour bits of
S cleared (the least vertex of the cube). Cubes of one S form a contiguous index block, ordered by
the free bits of v; in an l-fold cover each cube index is followed by its l sheets.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np
from scipy import sparse

from app.errors import DimensionBoundError, InputError, ResourceBoundExceeded
from app.game.models import Moves, State
from app.homology.chains import ChainComplex
from app.polytope.faces import face_numbers, spanning_sets
from app.polytope.models import Colouring, Polytope
from app.polytope.validation import validate_colouring
from app.settings import load_settings

logger = logging.getLogger(__name__)


def _free_bits(mask: int, palette_size: int) -> list[int]:
    return [bit for bit in range(palette_size) if not mask >> bit & 1]


def compress(vertices: np.ndarray, free: list[int]) -> np.ndarray:
    """Pack the listed bits of each vertex into consecutive low bits."""
    packed = np.zeros(np.shape(vertices), dtype=np.int64)
    for position, bit in enumerate(free):
        packed |= ((vertices >> bit) & 1) << position
    return packed


def expand(indices: np.ndarray, free: list[int]) -> np.ndarray:
    vertices = np.zeros(np.shape(indices), dtype=np.int64)
    for position, bit in enumerate(free):
        vertices |= ((indices >> position) & 1) << bit
    return vertices


@dataclass(frozen=True)
class Orientation:
    state: State
    moves: Moves


@dataclass(frozen=True, eq=False)
class CubeComplex:
    polytope: Polytope
    colouring: Colouring
    up_to_dim: int
    simplices: tuple[tuple[tuple[int, ...], ...], ...]
    sheets: int = 1
    lift: np.ndarray | None = None
    orientation: Orientation | None = None

    @property
    def palette_size(self) -> int:
        return self.colouring.palette_size

    @cached_property
    def masks(self) -> tuple[np.ndarray, ...]:
        return tuple(
            np.array([sum(self.colouring.bit(f) for f in simplex) for simplex in layer], dtype=np.int64)
            for layer in self.simplices
        )

    @cached_property
    def offsets(self) -> tuple[np.ndarray, ...]:
        """Start of each simplex's block of cubes in its dimension, before sheets."""
        result = []
        for k, layer in enumerate(self.simplices):
            block = 1 << (self.palette_size - k)
            result.append(np.arange(len(layer), dtype=np.int64) * block)
        return tuple(result)

    @cached_property
    def simplex_ids(self) -> tuple[dict[tuple[int, ...], int], ...]:
        return tuple({simplex: i for i, simplex in enumerate(layer)} for layer in self.simplices)

    @property
    def top_dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def is_complete(self) -> bool:
        return self.up_to_dim >= self.polytope.dim or self.top_dim < self.up_to_dim

    def count(self, k: int) -> int:
        if not 0 <= k < len(self.simplices):
            return 0
        return len(self.simplices[k]) * (1 << (self.palette_size - k)) * self.sheets

    def cell_counts(self) -> tuple[int, ...]:
        return tuple(self.count(k) for k in range(len(self.simplices)))

    def cell_index(self, simplex: tuple[int, ...], vertex: int, sheet: int = 0) -> int:
        """Index of the cube spanned at ``vertex`` (any of its corners) by the facets in ``simplex``."""
        key = tuple(sorted(simplex))
        k = len(key)
        sid = self.simplex_ids[k][key]
        free = _free_bits(int(self.masks[k][sid]), self.palette_size)
        local = int(compress(np.int64(vertex), free))
        return (int(self.offsets[k][sid]) + local) * self.sheets + int(sheet) % self.sheets

    def edge_index(self, vertex: int, facet: int) -> int:
        return self.cell_index((facet,), vertex)

    def edge_endpoints(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Lower vertex, upper vertex and facet of every base edge, in index order."""
        lowers, uppers, facets = [], [], []
        for sid, (facet,) in enumerate(self.simplices[1]):
            mask = int(self.masks[1][sid])
            lower = expand(np.arange(1 << (self.palette_size - 1), dtype=np.int64), _free_bits(mask, self.palette_size))
            lowers.append(lower)
            uppers.append(lower | mask)
            facets.append(np.full(len(lower), facet, dtype=np.int64))
        if not lowers:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty, empty
        return np.concatenate(lowers), np.concatenate(uppers), np.concatenate(facets)

    def boundary(self, k: int) -> sparse.csc_matrix:
        """Cellular boundary C_k -> C_{k-1}: the sum over i of (-1)^i (upper_i - lower_i)."""
        rows_total, cols_total = self.count(k - 1), self.count(k)
        if k < 1 or k >= len(self.simplices):
            return sparse.csc_matrix((rows_total, cols_total), dtype=np.int64)
        sheets = self.sheets
        sheet_ids = np.arange(sheets, dtype=np.int64)
        rows, cols, data = [], [], []
        block = 1 << (self.palette_size - k)
        local = np.arange(block, dtype=np.int64)
        for sid, simplex in enumerate(self.simplices[k]):
            mask = int(self.masks[k][sid])
            vertices = expand(local, _free_bits(mask, self.palette_size))
            columns = ((self.offsets[k][sid] + local)[:, None] * sheets + sheet_ids[None, :]).ravel()
            for i, facet in enumerate(simplex):
                bit = self.colouring.bit(facet)
                face = simplex[:i] + simplex[i + 1 :]
                fid = self.simplex_ids[k - 1][face]
                face_free = _free_bits(int(self.masks[k - 1][fid]), self.palette_size)
                lower = self.offsets[k - 1][fid] + compress(vertices, face_free)
                upper = self.offsets[k - 1][fid] + compress(vertices | bit, face_free)
                shift = np.zeros(block, dtype=np.int64)
                if self.lift is not None:
                    edge_sid = self.simplex_ids[1][(facet,)]
                    edge_free = _free_bits(int(self.masks[1][edge_sid]), self.palette_size)
                    shift = self.lift[self.offsets[1][edge_sid] + compress(vertices, edge_free)]
                sign = -1 if i % 2 else 1
                lower_rows = (lower[:, None] * sheets + sheet_ids[None, :]).ravel()
                upper_rows = (upper[:, None] * sheets + (sheet_ids[None, :] + shift[:, None]) % sheets).ravel()
                rows.extend([upper_rows, lower_rows])
                cols.extend([columns, columns])
                data.extend([np.full(len(columns), sign, dtype=np.int64), np.full(len(columns), -sign, dtype=np.int64)])
        matrix = sparse.coo_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(rows_total, cols_total),
            dtype=np.int64,
        )
        return matrix.tocsc()


def build(P: Polytope, colouring: Colouring, up_to_dim: int, cell_cap: int | None = None) -> CubeComplex:
    report = validate_colouring(P, colouring)
    if not report.is_valid:
        raise InputError(f"invalid_colouring:{report.violations[0]}")
    if up_to_dim < 0:
        raise InputError(f"negative_dimension:{up_to_dim}")
    settings = load_settings()
    cap = int(cell_cap if cell_cap is not None else settings.cell_cap)
    if colouring.palette_size > settings.max_palette:
        raise ResourceBoundExceeded(f"palette {colouring.palette_size} exceeds {settings.max_palette}")

    spanning = spanning_sets(P, up_to_dim) if up_to_dim >= 1 else []
    simplices: list[tuple[tuple[int, ...], ...]] = [((),)]
    for group in spanning[:up_to_dim]:
        simplices.append(tuple(group))
    for k, layer in enumerate(simplices):
        cells = len(layer) << (colouring.palette_size - k)
        if cells > cap:
            raise ResourceBoundExceeded(f"{cells} cells of dimension {k} exceed cap {cap}")

    complex_ = CubeComplex(polytope=P, colouring=colouring, up_to_dim=int(up_to_dim), simplices=tuple(simplices))
    logger.info("built cubulation up to dim %s: cells=%s", up_to_dim, complex_.cell_counts())
    return complex_


def chain_complex(C: CubeComplex) -> ChainComplex:
    boundaries = tuple(C.boundary(k) for k in range(1, len(C.simplices)))
    complete = None if C.is_complete else C.up_to_dim - 1
    return ChainComplex(C.cell_counts(), boundaries, complete)


def euler_characteristic(C: CubeComplex) -> int:
    if not C.is_complete:
        raise DimensionBoundError(f"built to dimension {C.up_to_dim}, polytope has dimension {C.polytope.dim}")
    return sum((-1) ** k * count for k, count in enumerate(C.cell_counts()))


def euler_characteristic_from_nerve(P: Polytope, colouring: Colouring) -> int:
    """Alternating cube count from the nerve face numbers, without building any cells."""
    numbers = face_numbers(P)
    c = colouring.palette_size
    return sum((-1) ** k * count * 2 ** (c - k) for k, count in enumerate(numbers))


def with_lift(C: CubeComplex, lift: np.ndarray, sheets: int) -> CubeComplex:
    return replace(C, sheets=int(sheets), lift=np.asarray(lift, dtype=np.int64))


__all__ = [
    "CubeComplex",
    "Orientation",
    "build",
    "chain_complex",
    "compress",
    "euler_characteristic",
    "euler_characteristic_from_nerve",
    "expand",
    "with_lift",
]
