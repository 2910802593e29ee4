"""Structural checks for polytopes and colourings."""

from __future__ import annotations

import logging
from itertools import combinations

from app.polytope.models import Colouring, Polytope, ValidationReport

logger = logging.getLogger(__name__)


def _facet_in_range(P: Polytope, facet: int) -> bool:
    return 0 <= facet < P.num_facets


def validate_polytope(P: Polytope) -> ValidationReport:
    """Collect every violated structural invariant; an empty report means the data is usable."""
    report = ValidationReport()
    if P.dim < 2:
        report.add(f"dimension_too_small:{P.dim}")
    if P.num_facets < 1:
        report.add("no_facets")

    for a, b in sorted(P.adjacency):
        report.checked += 1
        if a == b:
            report.add(f"facet adjacent to itself:{a}")
        elif not (_facet_in_range(P, a) and _facet_in_range(P, b)):
            report.add(f"adjacency out of range:{a},{b}")

    seen: set[int] = set()
    for vertex_id, vertex in enumerate(P.finite_vertices):
        report.checked += 1
        if len(vertex) != P.dim or len(set(vertex)) != len(vertex):
            report.add(f"finite vertex {vertex_id} needs {P.dim} distinct facets, got {list(vertex)}")
        for facet in vertex:
            if not _facet_in_range(P, facet):
                report.add(f"finite vertex {vertex_id} facet out of range:{facet}")
        for a, b in combinations(vertex, 2):
            if a != b and not P.adjacent(a, b):
                report.add(f"finite vertex {vertex_id} facets not adjacent:{a},{b}")
        seen.update(vertex)

    for vertex_id, vertex in enumerate(P.ideal_vertices):
        report.checked += 1
        if len(vertex.pairs) != P.dim - 1:
            report.add(f"ideal vertex {vertex_id} needs {P.dim - 1} opposite pairs, got {len(vertex.pairs)}")
        facets = vertex.facets
        if len(set(facets)) != len(facets):
            report.add(f"ideal vertex {vertex_id} repeats a facet")
        for facet in facets:
            if not _facet_in_range(P, facet):
                report.add(f"ideal vertex {vertex_id} facet out of range:{facet}")
        for i, (first, second) in enumerate(vertex.pairs):
            if P.adjacent(first, second):
                report.add(f"ideal vertex {vertex_id} opposite facets adjacent:{first},{second}")
            for other in vertex.pairs[i + 1 :]:
                for a in (first, second):
                    for b in other:
                        if a != b and not P.adjacent(a, b):
                            report.add(f"ideal vertex {vertex_id} facets not adjacent:{a},{b}")
        seen.update(facets)

    for facet in P.facets:
        if facet not in seen:
            report.add(f"facet in no vertex record:{facet}")

    if report.violations:
        logger.info("polytope validation found %s violations", len(report.violations))
    return report


def validate_colouring(P: Polytope, colouring: Colouring) -> ValidationReport:
    """Check that the colouring is proper and uses every colour of its palette."""
    report = ValidationReport()
    if colouring.palette_size < 1:
        report.add(f"palette_size_must_be_positive:{colouring.palette_size}")
    if len(colouring.colours) != P.num_facets:
        report.add(f"colour count {len(colouring.colours)} does not match {P.num_facets} facets")
        return report

    for facet, colour in enumerate(colouring.colours):
        report.checked += 1
        if not 1 <= colour <= colouring.palette_size:
            report.add(f"facet {facet} colour out of palette:{colour}")

    for a, b in sorted(P.adjacency):
        report.checked += 1
        if _facet_in_range(P, a) and _facet_in_range(P, b) and colouring.colours[a] == colouring.colours[b]:
            report.add(f"adjacent facets share colour {colouring.colours[a]}:{a},{b}")

    unused = sorted(set(range(1, colouring.palette_size + 1)) - set(colouring.colours))
    for colour in unused:
        report.add(f"colour unused:{colour}")
    return report


__all__ = ["validate_colouring", "validate_polytope"]
