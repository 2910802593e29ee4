"""Exact rank and Smith invariants of sparse integer matrices.

Unit pivots are eliminated sparsely, lightest column first and lightest row within it. Whatever is
left without a unit entry is handed to a dense Smith normal form.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Reduction:
    unit_rank: int
    remainder: dict[int, dict[int, int]]


def _columns(matrix, modulus: int | None) -> dict[int, dict[int, int]]:
    csc = sparse.csc_matrix(matrix, dtype=np.int64)
    csc.sum_duplicates()
    columns: dict[int, dict[int, int]] = {}
    indptr, indices, data = csc.indptr, csc.indices, csc.data
    for column in range(csc.shape[1]):
        entries: dict[int, int] = {}
        for position in range(indptr[column], indptr[column + 1]):
            value = int(data[position])
            if modulus is not None:
                value %= modulus
            if value:
                entries[int(indices[position])] = value
        if entries:
            columns[column] = entries
    return columns


def reduce_units(matrix, modulus: int | None = None) -> Reduction:
    """Eliminate ±1 pivots; ``modulus`` 2 reduces over F_2, where every nonzero entry is a unit."""
    if modulus not in (None, 2):
        raise ValueError(f"unsupported_modulus:{modulus}")
    columns = _columns(matrix, modulus)
    rows: dict[int, set[int]] = {}
    for column, entries in columns.items():
        for row in entries:
            rows.setdefault(row, set()).add(column)

    version = dict.fromkeys(columns, 0)
    heap = [(len(entries), column, 0) for column, entries in columns.items()]
    heapq.heapify(heap)
    unit_rank = 0

    while heap:
        _, column, stamp = heapq.heappop(heap)
        entries = columns.get(column)
        if entries is None or version[column] != stamp:
            continue
        pivot_row = None
        lightest = 0
        for row, value in entries.items():
            if value in (1, -1):
                weight = len(rows[row])
                if pivot_row is None or weight < lightest or (weight == lightest and row < pivot_row):
                    pivot_row, lightest = row, weight
        if pivot_row is None:
            continue

        pivot = entries[pivot_row]
        for other in sorted(rows[pivot_row] - {column}):
            target = columns[other]
            factor = target[pivot_row] * pivot
            for row, value in entries.items():
                updated = target.get(row, 0) - factor * value
                if modulus is not None:
                    updated %= modulus
                if updated:
                    if row not in target:
                        rows[row].add(other)
                    target[row] = updated
                elif row in target:
                    del target[row]
                    rows[row].discard(other)
            version[other] += 1
            if target:
                heapq.heappush(heap, (len(target), other, version[other]))
            else:
                del columns[other]
        for row in entries:
            rows[row].discard(column)
        del columns[column]
        unit_rank += 1

    return Reduction(unit_rank=unit_rank, remainder=columns)


def _dense_invariants(remainder: dict[int, dict[int, int]]) -> list[int]:
    if not remainder:
        return []
    row_ids = sorted({row for entries in remainder.values() for row in entries})
    position = {row: index for index, row in enumerate(row_ids)}
    column_ids = sorted(remainder)
    dense = [[0] * len(column_ids) for _ in row_ids]
    for j, column in enumerate(column_ids):
        for row, value in remainder[column].items():
            dense[position[row]][j] = value
    logger.debug("dense smith form on %sx%s remainder", len(row_ids), len(column_ids))
    factors = invariant_factors(Matrix(dense), domain=ZZ)
    return sorted(abs(int(value)) for value in factors if int(value) != 0)


def smith_invariants(matrix) -> tuple[int, ...]:
    """Nonzero invariant factors, ones included, in increasing order."""
    reduction = reduce_units(matrix)
    return tuple([1] * reduction.unit_rank + _dense_invariants(reduction.remainder))


def matrix_rank(matrix, field: str = "Q") -> int:
    if field == "Z2":
        return reduce_units(matrix, modulus=2).unit_rank
    if field == "Q":
        return len(smith_invariants(matrix))
    raise ValueError(f"unsupported_field:{field}")


__all__ = ["Reduction", "matrix_rank", "reduce_units", "smith_invariants"]
