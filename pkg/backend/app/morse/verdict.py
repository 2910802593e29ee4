"""Batch certification of ascending and descending links."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field

import networkx as nx
import numpy as np

from app.errors import InputError, ResourceBoundExceeded
from app.game.models import Moves, State
from app.game.squares import classify_all
from app.homology.betti import betti, integral_homology
from app.homology.collapse import Certificate
from app.homology.presentation import certify_simply_connected, one_skeleton
from app.homology.simplicial import SimplicialComplex, restrict_to_mask
from app.morse.links import nerve, status_patterns
from app.polytope.models import Colouring, Polytope
from app.settings import load_settings
from app.worker.pool import ordered_map

logger = logging.getLogger(__name__)

_NERVE: SimplicialComplex | None = None
_DEGREE = 3
_BUDGET = 10_000


@dataclass
class LinkCheck:
    members: tuple[int, ...]
    sources: list[str]
    occurrences: int
    nonempty: bool = False
    connected: bool = False
    reduced_betti_q: tuple[int, ...] = ()
    reduced_betti_z2: tuple[int, ...] = ()
    torsion: tuple[tuple[int, ...], ...] = ()
    simply_connected: str | None = None
    certificate_method: str | None = None
    level: int = 0

    @property
    def h1_vanishes(self) -> bool:
        return not any(
            len(values) > 1 and values[1] for values in (self.reduced_betti_q, self.reduced_betti_z2)
        ) and not (len(self.torsion) > 1 and self.torsion[1])

    @property
    def unknown(self) -> bool:
        """Undecided simple connectivity; a nonzero reduced H_1 already refutes it."""
        return self.connected and self.h1_vanishes and self.simply_connected == Certificate.UNKNOWN.value

    def as_dict(self) -> dict:
        payload = asdict(self)
        payload["members"] = list(self.members)
        payload["vertices"] = len(self.members)
        payload["h1_vanishes"] = self.h1_vanishes
        payload["unknown"] = self.unknown
        return payload


@dataclass
class LinkReport:
    degree: int
    level: int
    patterns: int
    checks: list[LinkCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.level >= self.degree

    @property
    def verdict(self) -> str:
        if not self.passed and self.unknowns and not self.failures:
            return "unknown"
        return f"F{self.level}" if self.level > 0 else "none"

    @property
    def failures(self) -> list[LinkCheck]:
        return [check for check in self.checks if check.level < self.degree and not check.unknown]

    @property
    def unknowns(self) -> list[LinkCheck]:
        return [check for check in self.checks if check.unknown]

    def as_dict(self, include_passing: bool = False) -> dict:
        shown = self.checks if include_passing else [c for c in self.checks if c.level < self.degree]
        return {
            "degree": self.degree,
            "verdict": self.verdict,
            "passed": self.passed,
            "patterns": self.patterns,
            "failures": len(self.failures),
            "unknowns": len(self.unknowns),
            "links": [check.as_dict() for check in shown],
        }


def _install(L: SimplicialComplex, degree: int, budget: int) -> None:
    global _NERVE, _DEGREE, _BUDGET
    _NERVE, _DEGREE, _BUDGET = L, degree, budget


def check_link(link: SimplicialComplex, degree: int, budget: int) -> LinkCheck:
    """Highest j <= degree such that the link passes the F_j conditions.

    F_1: nonempty and connected. F_2: also simply connected (certified). F_j for j >= 3: also
    reduced homology vanishing through degree j - 1 over Q, F_2 and Z.
    """
    members = tuple(int(vertex) for vertex in link.vertices.tolist())
    check = LinkCheck(members=members, sources=[], occurrences=0)
    check.nonempty = not link.is_empty
    if not check.nonempty:
        return check
    top = max(0, degree - 1)
    homology = integral_homology(link, up_to=top, reduced=True)
    check.reduced_betti_q = homology.ranks
    check.torsion = homology.torsion
    check.reduced_betti_z2 = betti(link, field="Z2", up_to=top, reduced=True)
    check.connected = nx.is_connected(one_skeleton(link))
    if not check.connected:
        return check
    check.level = 1
    if degree < 2:
        return check
    certificate, method = certify_simply_connected(link, budget=budget)
    check.simply_connected = certificate.value
    check.certificate_method = method
    if certificate is not Certificate.CERTIFIED:
        return check
    check.level = 2
    for j in range(3, degree + 1):
        vanishing = (
            not any(homology.ranks[: j])
            and not any(homology.torsion[: j])
            and not any(check.reduced_betti_z2[: j])
        )
        if not vanishing:
            break
        check.level = j
    return check


def _check_members(members: np.ndarray) -> LinkCheck:
    if _NERVE is None:
        raise RuntimeError("link worker not initialised")
    return check_link(restrict_to_mask(_NERVE, members), _DEGREE, _BUDGET)


def check_all_links(
    P: Polytope,
    colouring: Colouring,
    state: State,
    moves: Moves,
    k: int = 3,
    jobs: int | None = None,
    budget: int | None = None,
) -> LinkReport:
    """Certify every distinct ascending and descending link; the kernel is F_k iff all reach level k."""
    if k < 1:
        raise InputError(f"degree_must_be_positive:{k}")
    report = classify_all(P, colouring, state, moves)
    if not report.coherent:
        raise InputError("non_coherent_orientation")
    settings = load_settings()
    if colouring.palette_size > settings.max_palette:
        raise ResourceBoundExceeded(f"palette {colouring.palette_size} exceeds {settings.max_palette}")
    budget = settings.tietze_budget if budget is None else int(budget)

    L = nerve(P, max_dim=k)
    links: dict[tuple[bool, ...], list] = {}
    for pattern in status_patterns(colouring, state, moves):
        for direction, members in (("ascending", pattern.outward), ("descending", pattern.inward)):
            entry = links.setdefault(members, [[], 0])
            entry[1] += pattern.count
            if len(entry[0]) < 4:
                entry[0].append(f"{direction}@{pattern.vertex}")
    ordered = sorted(links.items(), key=lambda item: (sum(item[0]), item[0]))
    logger.info("checking %s distinct links of %s vertices", len(ordered), 1 << colouring.palette_size)

    checks = ordered_map(
        _check_members,
        [np.asarray(members, dtype=bool) for members, _ in ordered],
        jobs=jobs,
        initializer=_install,
        initargs=(L, int(k), budget),
    )
    for check, (_, entry) in zip(checks, ordered, strict=True):
        check.sources = list(entry[0])
        check.occurrences = int(entry[1])

    level = min((check.level for check in checks), default=0)
    result = LinkReport(degree=int(k), level=level, patterns=len(checks), checks=checks)
    if result.unknowns:
        logger.warning("%s links left without a simple-connectivity certificate", len(result.unknowns))
    return result


__all__ = ["LinkCheck", "LinkReport", "check_all_links", "check_link"]
