"""Characters on cusp lattices, the 2pi systole check and the perturbation search."""

from __future__ import annotations

import logging
import math
from collections.abc import Collection, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice, product

from app.characters.cusps import CuspTorus, evaluate_torus
from app.characters.lattice import Systole, Vector, kernel_sublattice, primitive, short_vectors, systole
from app.errors import InputError, NoSolutionWithinBound
from app.settings import load_settings
from app.worker.pool import ordered_map, resolve_jobs

logger = logging.getLogger(__name__)

CuspKey = tuple[int, int]
TWO_PI = math.tau


@dataclass(frozen=True)
class Character:
    """Values of a character on the loop basis of each cusp lattice."""

    values: Mapping[CuspKey, tuple[Fraction, ...]]

    @classmethod
    def build(cls, values: Mapping[CuspKey, Iterable]) -> Character:
        return cls({(int(key[0]), int(key[1])): tuple(Fraction(v) for v in row) for key, row in values.items()})

    @property
    def keys(self) -> list[CuspKey]:
        return sorted(self.values)

    def on(self, key: CuspKey) -> tuple[Fraction, ...]:
        try:
            return self.values[key]
        except KeyError as exc:
            raise InputError(f"character_missing_cusp:{key[0]},{key[1]}") from exc

    def __add__(self, other: Character) -> Character:
        if set(self.values) != set(other.values):
            raise InputError("character_cusp_mismatch")
        return Character(
            {key: tuple(a + b for a, b in zip(row, other.on(key), strict=True)) for key, row in self.values.items()}
        )

    def scaled(self, factor) -> Character:
        factor = Fraction(factor)
        return Character({key: tuple(factor * value for value in row) for key, row in self.values.items()})

    @property
    def is_integral(self) -> bool:
        return all(value.denominator == 1 for row in self.values.values() for value in row)

    def integral(self) -> Character:
        """Smallest positive multiple with integer values."""
        denominators = [value.denominator for row in self.values.values() for value in row]
        return self.scaled(math.lcm(*denominators) if denominators else 1)


def character_from_cocycle(z, tori: Iterable[CuspTorus]) -> Character:
    return Character({torus.key: evaluate_torus(z, torus) for torus in tori})


@dataclass(frozen=True)
class TwoPiCheck:
    key: CuspKey
    passed: bool
    systole: Systole | None
    reason: str = ""


def _kernel_systole(torus: CuspTorus, values: Sequence[Fraction]) -> Systole | None:
    lattice = kernel_sublattice(values)
    if lattice.full:
        return None
    return systole(torus.gram, lattice.basis)


def two_pi_check(mu: Character, tori: Iterable[CuspTorus]) -> list[TwoPiCheck]:
    """Per cusp: does every closed geodesic of the kernel subtorus exceed 2pi."""
    checks = []
    for torus in tori:
        values = mu.on(torus.key)
        if len(values) != torus.rank:
            raise InputError(f"character_rank_mismatch:{torus.key[0]},{torus.key[1]}")
        shortest = _kernel_systole(torus, values)
        if shortest is None:
            checks.append(TwoPiCheck(torus.key, False, None, "trivial_on_cusp"))
        elif shortest.exceeds(TWO_PI):
            checks.append(TwoPiCheck(torus.key, True, shortest))
        else:
            checks.append(TwoPiCheck(torus.key, False, shortest, "systole_at_most_2pi"))
    return checks


@dataclass(frozen=True)
class ShortVector:
    vector: Vector
    squared_length: Fraction
    value: Fraction


@dataclass(frozen=True)
class CuspCertificate:
    key: CuspKey
    values: tuple[Fraction, ...]
    vectors: tuple[ShortVector, ...]

    @property
    def avoids_kernel(self) -> bool:
        return any(self.values) and all(item.value != 0 for item in self.vectors)


@dataclass(frozen=True)
class PerturbResult:
    target: Fraction
    character: Character
    coefficients: tuple[Fraction, ...]
    candidates_checked: int
    cusps: tuple[CuspCertificate, ...]
    two_pi: tuple[TwoPiCheck, ...]

    @property
    def certified(self) -> bool:
        return all(cusp.avoids_kernel for cusp in self.cusps)


def scalar_grid(max_numerator: int, max_denominator: int, box: int) -> list[Fraction]:
    """Rationals p/q with q <= D, |p| <= N and |p/q| <= box, simplest first."""
    values = {
        Fraction(p, q)
        for q in range(1, max_denominator + 1)
        for p in range(-max_numerator, max_numerator + 1)
        if abs(Fraction(p, q)) <= box
    }
    return sorted(values, key=lambda value: (value.denominator, abs(value.numerator), value < 0))


def candidate_stream(count: int, scalars: Sequence[Fraction]) -> Iterator[tuple[Fraction, ...]]:
    """Coefficient vectors over ``scalars``: stage t adds the vectors whose largest scalar index is t,
    in lexicographic index order. The all-zero vector comes first."""
    if count == 0:
        yield ()
        return
    for top in range(len(scalars)):
        for indices in product(range(top + 1), repeat=count):
            if max(indices) == top:
                yield tuple(scalars[i] for i in indices)


_SEARCH: tuple[list, list, list, frozenset] | None = None


def _install(base: list, aux: list, short: list, avoid: frozenset = frozenset()) -> None:
    global _SEARCH
    _SEARCH = (base, aux, short, avoid)


def _combined(coefficients: Sequence[Fraction]) -> list[list[Fraction]]:
    if _SEARCH is None:
        raise RuntimeError("perturb worker not initialised")
    base, aux, _, _ = _SEARCH
    rows = []
    for s, row in enumerate(base):
        values = list(row)
        for weight, character in zip(coefficients, aux, strict=True):
            if weight:
                values = [a + weight * b for a, b in zip(values, character[s], strict=True)]
        rows.append(values)
    return rows


def _avoids(rows: list[list[Fraction]]) -> bool:
    assert _SEARCH is not None
    short, avoid = _SEARCH[2], _SEARCH[3]
    for values, vectors in zip(rows, short, strict=True):
        if not any(values):
            return False
    if avoid and primitive(rows[0]) in avoid:
        return False
    for values, vectors in zip(rows, short, strict=True):
        for vector in vectors:
            if sum((v * x for v, x in zip(values, vector, strict=True)), Fraction(0)) == 0:
                return False
    return True


def _first_valid(chunk: list[tuple[Fraction, ...]]) -> int | None:
    for index, coefficients in enumerate(chunk):
        if _avoids(_combined(coefficients)):
            return index
    return None


def perturb(
    chi: Character,
    n,
    tori: Sequence[CuspTorus],
    aux: Sequence[Character],
    jobs: int | None = None,
    batch: int = 512,
    avoid: Collection[Vector] = (),
) -> PerturbResult:
    """Search chi + sum lambda_k aux_k for a character nonzero on every lattice vector of length <= n.

    Candidates whose kernel on the first cusp is listed in ``avoid`` (as primitive value vectors)
    are skipped.

    Candidates are scanned in a fixed order; with several workers each round evaluates ``jobs``
    consecutive chunks and the earliest hit wins, so the answer does not depend on ``jobs``.
    """
    target = Fraction(n)
    if target <= 0:
        raise InputError(f"invalid_target:{n}")
    if not tori:
        raise InputError("no_cusps")
    settings = load_settings()
    for character in (chi, *aux):
        for torus in tori:
            if len(character.on(torus.key)) != torus.rank:
                raise InputError(f"character_rank_mismatch:{torus.key[0]},{torus.key[1]}")

    lengths = [dict(short_vectors(torus.gram, target)) for torus in tori]
    short = [list(length) for length in lengths]
    base = [list(chi.on(torus.key)) for torus in tori]
    aux_rows = [[list(character.on(torus.key)) for torus in tori] for character in aux]
    logger.info(
        "perturb target %s over %s cusps: %s short vectors, %s auxiliary characters",
        target,
        len(tori),
        sum(len(vectors) for vectors in short),
        len(aux),
    )

    scalars = scalar_grid(
        settings.perturb_max_numerator, settings.perturb_max_denominator, settings.perturb_coefficient_box
    )
    workers = resolve_jobs(jobs)
    stream = candidate_stream(len(aux), scalars)
    initargs = (base, aux_rows, short, frozenset(tuple(vector) for vector in avoid))
    checked = 0
    found: tuple[Fraction, ...] | None = None
    while found is None:
        chunks = [chunk for chunk in (list(islice(stream, batch)) for _ in range(workers)) if chunk]
        if not chunks:
            raise NoSolutionWithinBound(f"{checked} candidates at target {target}")
        hits = ordered_map(_first_valid, chunks, jobs=workers, initializer=_install, initargs=initargs, chunksize=1)
        for chunk, hit in zip(chunks, hits, strict=True):
            if hit is not None:
                found = chunk[hit]
                checked += hit + 1
                break
            checked += len(chunk)

    mu = chi
    for weight, character in zip(found, aux, strict=True):
        if weight:
            mu = mu + character.scaled(weight)
    certificates = []
    for torus, vectors, length in zip(tori, short, lengths, strict=True):
        values = mu.on(torus.key)
        records = tuple(
            ShortVector(vector, length[vector], sum((v * x for v, x in zip(values, vector, strict=True)), Fraction(0)))
            for vector in vectors
        )
        certificates.append(CuspCertificate(torus.key, values, records))
    logger.info("perturb target %s: coefficients %s after %s candidates", target, found, checked)
    return PerturbResult(
        target=target,
        character=mu,
        coefficients=found,
        candidates_checked=checked,
        cusps=tuple(certificates),
        two_pi=tuple(two_pi_check(mu, tori)),
    )


@dataclass(frozen=True)
class FillingCertificate:
    checks: tuple[tuple[TwoPiCheck, ...], ...]
    distinct_cusps: tuple[CuspKey, ...]
    characters: int = 0

    @property
    def passed(self) -> bool:
        checks_ok = all(check.passed for row in self.checks for check in row)
        return checks_ok and (self.characters < 2 or bool(self.distinct_cusps))


def distinct_kernel_cusps(characters: Sequence[Character], tori: Iterable[CuspTorus]) -> tuple[CuspKey, ...]:
    """Cusps on which the characters' kernels are pairwise different."""
    keys = []
    for torus in tori:
        kernels = [primitive(character.on(torus.key)) for character in characters]
        if all(a != b for a, b in combinations(kernels, 2)):
            keys.append(torus.key)
    return tuple(keys)


def filling_certificate(
    characters: Sequence[Character],
    tori: Sequence[CuspTorus],
    targets: Sequence | None = None,
) -> FillingCertificate:
    """2pi checks for every character (or only those with target >= 2pi) plus kernel distinctness."""
    checked = [
        character
        for index, character in enumerate(characters)
        if targets is None or Fraction(targets[index]) >= TWO_PI
    ]
    return FillingCertificate(
        checks=tuple(tuple(two_pi_check(character, tori)) for character in checked),
        distinct_cusps=distinct_kernel_cusps(characters, tori),
        characters=len(characters),
    )


@dataclass(frozen=True)
class PerturbSequence:
    results: tuple[PerturbResult, ...]
    filling: FillingCertificate


def perturb_sequence(
    chi: Character,
    targets: Iterable,
    tori: Sequence[CuspTorus],
    aux: Sequence[Character],
    jobs: int | None = None,
) -> PerturbSequence:
    """One perturbation per target; each step skips kernels already used on the first cusp."""
    if not tori:
        raise InputError("no_cusps")
    anchor = tori[0].key
    used: list[Vector] = []
    results = []
    for target in targets:
        result = perturb(chi, target, tori, aux, jobs=jobs, avoid=used)
        used.append(primitive(result.character.on(anchor)))
        results.append(result)
    characters = [result.character for result in results]
    return PerturbSequence(
        tuple(results),
        filling_certificate(characters, tori, [result.target for result in results]),
    )


__all__ = [
    "Character",
    "CuspCertificate",
    "FillingCertificate",
    "PerturbResult",
    "PerturbSequence",
    "ShortVector",
    "TWO_PI",
    "TwoPiCheck",
    "candidate_stream",
    "character_from_cocycle",
    "distinct_kernel_cusps",
    "filling_certificate",
    "perturb",
    "perturb_sequence",
    "scalar_grid",
    "two_pi_check",
]
