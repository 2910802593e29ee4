"""Kernel sublattices of cusp characters and exact short-vector enumeration."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from sympy import Matrix, Rational

from app.errors import InputError

Vector = tuple[int, ...]


def _normalized(vector: Sequence[int]) -> Vector:
    """Sign fixed so the first nonzero entry is positive."""
    for value in vector:
        if value:
            return tuple(int(x) for x in vector) if value > 0 else tuple(-int(x) for x in vector)
    return tuple(int(x) for x in vector)


def integral_values(values: Sequence) -> tuple[int, ...]:
    """Clear denominators; the kernel does not change."""
    fractions = [Fraction(value) for value in values]
    scale = math.lcm(*(value.denominator for value in fractions)) if fractions else 1
    return tuple(int(value * scale) for value in fractions)


def primitive(values: Sequence) -> Vector:
    """Primitive integral vector on the same line, sign normalized; identifies the kernel."""
    integral = integral_values(values)
    divisor = math.gcd(*integral) if integral else 0
    if divisor == 0:
        return tuple(0 for _ in integral)
    return _normalized([value // divisor for value in integral])


@dataclass(frozen=True)
class KernelLattice:
    ambient_rank: int
    basis: tuple[Vector, ...]
    full: bool
    complement: Vector | None
    gcd: int


def kernel_sublattice(values: Sequence) -> KernelLattice:
    """Basis of {x in Z^r : sum x_i values_i = 0} by extended-gcd column operations."""
    current = list(integral_values(values))
    r = len(current)
    if r == 0:
        raise InputError("empty_value_vector")
    if not any(current):
        identity = tuple(tuple(1 if i == j else 0 for i in range(r)) for j in range(r))
        return KernelLattice(r, identity, True, None, 0)

    columns = [[1 if i == j else 0 for i in range(r)] for j in range(r)]
    while sum(1 for value in current if value) > 1:
        pivot = min((j for j in range(r) if current[j]), key=lambda j: (abs(current[j]), j))
        for j in range(r):
            if j == pivot or not current[j]:
                continue
            quotient = current[j] // current[pivot]
            current[j] -= quotient * current[pivot]
            columns[j] = [a - quotient * b for a, b in zip(columns[j], columns[pivot], strict=True)]
    pivot = next(j for j in range(r) if current[j])
    basis = tuple(_normalized(columns[j]) for j in range(r) if j != pivot)
    complement = tuple(columns[pivot]) if current[pivot] > 0 else tuple(-value for value in columns[pivot])
    return KernelLattice(r, basis, False, complement, abs(current[pivot]))


def _sympy_matrix(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return Matrix([[Rational(value.numerator, value.denominator) for value in row] for row in rows])


def restricted_gram(gram: Sequence[Sequence], basis: Sequence[Vector]) -> list[list[Fraction]]:
    g = [[Fraction(value) for value in row] for row in gram]
    return [
        [sum((a[i] * g[i][j] * b[j] for i in range(len(a)) for j in range(len(b))), Fraction(0)) for b in basis]
        for a in basis
    ]


def norm(gram: Sequence[Sequence], vector: Sequence[int]) -> Fraction:
    return restricted_gram(gram, [tuple(vector)])[0][0]


def _box_bounds(sub_gram: list[list[Fraction]], radius_squared: Fraction) -> list[int]:
    """|x_i| <= sqrt(R^2 (G^-1)_ii) for every x with x^T G x <= R^2."""
    inverse = _sympy_matrix(sub_gram).inv()
    bounds = []
    for i in range(len(sub_gram)):
        entry = Fraction(int(inverse[i, i].p), int(inverse[i, i].q))
        bounds.append(math.isqrt(math.floor(radius_squared * entry)))
    return bounds


def _check_positive_definite(sub_gram: list[list[Fraction]]) -> None:
    if not _sympy_matrix(sub_gram).is_positive_definite:
        raise InputError("gram_not_positive_definite")


def _enumerate(gram, basis: Sequence[Vector], radius_squared: Fraction):
    sub = restricted_gram(gram, basis)
    _check_positive_definite(sub)
    bounds = _box_bounds(sub, radius_squared)
    for coefficients in product(*(range(-b, b + 1) for b in bounds)):
        if not any(coefficients):
            continue
        value = sum(
            (coefficients[i] * sub[i][j] * coefficients[j] for i in range(len(sub)) for j in range(len(sub))),
            Fraction(0),
        )
        if value <= radius_squared:
            vector = tuple(
                sum(c * basis_vector[k] for c, basis_vector in zip(coefficients, basis, strict=True))
                for k in range(len(basis[0]))
            )
            yield vector, value


@dataclass(frozen=True)
class Systole:
    squared: Fraction | None
    vector: Vector | None

    @property
    def length(self) -> float:
        return math.inf if self.squared is None else math.sqrt(self.squared)

    def exceeds(self, bound: float) -> bool:
        return self.squared is None or self.squared > Fraction(bound) ** 2


def systole(gram: Sequence[Sequence], basis: Sequence[Vector]) -> Systole:
    """Shortest nonzero vector of the sublattice spanned by ``basis``, enumerated inside the ball
    whose radius is the shortest basis vector."""
    vectors = [tuple(int(x) for x in vector) for vector in basis]
    if not vectors:
        return Systole(None, None)
    radius_squared = min(norm(gram, vector) for vector in vectors)
    best: tuple[Fraction, Vector] | None = None
    for vector, value in _enumerate(gram, vectors, radius_squared):
        candidate = (value, _normalized(vector))
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return Systole(best[0], best[1])


def short_vectors(
    gram: Sequence[Sequence], radius, basis: Sequence[Vector] | None = None
) -> list[tuple[Vector, Fraction]]:
    """Nonzero vectors (up to sign) of the lattice spanned by ``basis`` (Z^r by default) with length
    at most ``radius``, sorted by length."""
    rank = len(gram)
    generators = [tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank)] if basis is None else list(basis)
    radius_squared = Fraction(radius) ** 2
    found: dict[Vector, Fraction] = {}
    if not generators:
        return []
    for vector, value in _enumerate(gram, generators, radius_squared):
        found[_normalized(vector)] = value
    return sorted(found.items(), key=lambda item: (item[1], item[0]))


__all__ = [
    "KernelLattice",
    "Systole",
    "integral_values",
    "kernel_sublattice",
    "norm",
    "primitive",
    "restricted_gram",
    "short_vectors",
    "systole",
]
