import numpy as np
import pytest
from app.errors import InputError, NoSolutionWithinBound
from app.game import Moves, State, is_balanced
from app.homology import SimplicialComplex
from app.morse import (
    LinkCheck,
    LinkReport,
    ascending_link,
    check_all_links,
    check_link,
    descending_link,
    disconnected_links,
    nerve,
    random_balanced_state,
    search_state,
)
from app.polytope import pyramid_polytope


def test_nerve_of_the_square_is_a_four_cycle(square):
    P, _, _, _ = square

    L = nerve(P)

    assert L.f_vector() == (4, 4)
    assert not L.truncated


def test_nerve_of_the_pyramid_is_a_disc():
    L = nerve(pyramid_polytope())

    assert L.f_vector() == (5, 8, 4)


def test_nerve_cut_marks_the_complex_truncated(cube):
    P, _, _, _ = cube

    L = nerve(P, max_dim=1)

    assert L.f_vector() == (6, 12)
    assert L.truncated


def test_ascending_and_descending_links_split_the_facets(square):
    P, colouring, state, moves = square
    L = nerve(P)

    up = ascending_link(L, colouring, state, moves, 2)
    down = descending_link(L, colouring, state, moves, 2)

    assert up.vertices.tolist() == [0, 1, 3]
    assert up.f_vector() == (3, 2)
    assert down.vertices.tolist() == [2]


def test_single_outward_square_passes_every_degree(square):
    P, colouring, state, moves = square

    report = check_all_links(P, colouring, state, moves, k=3)

    assert report.passed
    assert report.verdict == "F3"
    assert report.patterns == 4
    assert {check.occurrences for check in report.checks} == {2}
    assert report.failures == []
    assert report.as_dict()["links"] == []


def test_alternating_square_fails_at_connectivity(square):
    P, colouring, _, moves = square

    report = check_all_links(P, colouring, State.from_labels("OIOI"), moves, k=1)

    assert not report.passed
    assert report.level == 0
    assert report.verdict == "none"
    failing = {check.members for check in report.failures}
    assert (0, 2) in failing
    assert (1, 3) in failing


def test_constant_state_has_an_empty_link(square):
    P, colouring, _, moves = square

    report = check_all_links(P, colouring, State.constant(4), moves, k=2)

    assert not report.passed
    assert any(not check.nonempty for check in report.checks)


def test_cube_single_outward_state_passes_f3(cube):
    P, colouring, state, moves = cube

    report = check_all_links(P, colouring, state, moves, k=3, jobs=1)

    assert report.passed
    assert report.level == 3
    assert all(check.simply_connected == "Certified" for check in report.checks)


def test_non_coherent_orientation_is_refused(square):
    P, colouring, _, _ = square

    with pytest.raises(InputError, match="non_coherent_orientation"):
        check_all_links(P, colouring, State.constant(4), Moves.build([(1, 2)]), k=1)


def test_degree_must_be_positive(square):
    P, colouring, state, moves = square

    with pytest.raises(InputError, match="degree_must_be_positive:0"):
        check_all_links(P, colouring, state, moves, k=0)


def test_check_link_levels_on_standard_complexes():
    cone = SimplicialComplex.from_simplices([(0, 1, 9), (1, 2, 9), (2, 3, 9), (0, 3, 9)])
    sphere = SimplicialComplex.from_simplices([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    circle = SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)])

    assert check_link(cone, 3, 100).level == 3
    sphere_check = check_link(sphere, 3, 100)
    assert sphere_check.level == 2
    assert sphere_check.certificate_method == "presentation"
    circle_check = check_link(circle, 3, 100)
    assert circle_check.level == 1
    assert not circle_check.h1_vanishes
    assert not circle_check.unknown
    assert circle_check.reduced_betti_q == (0, 1, 0)


def test_projective_plane_link_stops_at_connectivity_with_torsion():
    rp2 = SimplicialComplex.from_simplices(
        [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2), (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    )

    check = check_link(rp2, 3, 1000)

    assert check.level == 1
    assert check.torsion[1] == (2,)
    assert check.as_dict()["unknown"] is False
    assert check.as_dict()["h1_vanishes"] is False


def _rp2():
    return SimplicialComplex.from_simplices(
        [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2), (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    )


def _undecided_link() -> LinkCheck:
    return LinkCheck(
        members=(0, 1, 2),
        sources=["ascending@0"],
        occurrences=1,
        nonempty=True,
        connected=True,
        reduced_betti_q=(0, 0, 0),
        reduced_betti_z2=(0, 0, 0),
        torsion=((), (), ()),
        simply_connected="Unknown",
        level=1,
    )


def test_links_with_nonzero_first_homology_are_failures_not_unknowns():
    circle = check_link(SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)]), 3, 100)
    rp2 = check_link(_rp2(), 3, 1000)

    report = LinkReport(degree=3, level=1, patterns=2, checks=[circle, rp2])

    assert report.failures == [circle, rp2]
    assert report.unknowns == []
    assert report.verdict == "F1"
    assert report.as_dict()["failures"] == 2


def test_undecided_simple_connectivity_gives_an_unknown_verdict():
    undecided = _undecided_link()

    assert undecided.h1_vanishes
    assert undecided.unknown
    report = LinkReport(degree=3, level=1, patterns=1, checks=[undecided])
    assert report.failures == []
    assert report.verdict == "unknown"
    assert report.as_dict()["unknowns"] == 1

    circle = check_link(SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)]), 3, 100)
    mixed = LinkReport(degree=3, level=1, patterns=2, checks=[undecided, circle])
    assert mixed.verdict == "F1"


@pytest.mark.parametrize("fixture, links", [("square", 4), ("cube", 8)])
def test_search_state_finds_connected_links_on_reference_manifolds(fixture, links, request, seed):
    P, colouring, _, moves = request.getfixturevalue(fixture)

    result = search_state(P, colouring, moves, attempts=4, seed=seed)

    assert result.connected
    assert result.disconnected == 0
    assert result.attempts == 1
    assert result.links == links
    assert is_balanced(colouring, result.state)
    assert check_all_links(P, colouring, result.state, moves, k=1).passed


def test_disconnected_links_counts_empty_and_split_links(square):
    P, colouring, _, moves = square

    assert disconnected_links(P, colouring, State.from_labels("OIOI"), moves) == (3, 4)


def test_random_balanced_state_needs_even_colour_classes(pyramid, square, seed):
    P, colouring, _, moves = pyramid

    with pytest.raises(InputError, match="odd_colour_class:1"):
        random_balanced_state(colouring, np.random.default_rng(seed))
    with pytest.raises(InputError, match="odd_colour_class:1"):
        search_state(P, colouring, moves, attempts=2, seed=seed)

    P, colouring, _, moves = square
    with pytest.raises(InputError, match="invalid_attempts:0"):
        search_state(P, colouring, moves, attempts=0)


def test_search_state_gives_up_without_a_coherent_candidate(square):
    P, colouring, _, _ = square

    with pytest.raises(NoSolutionWithinBound, match="no_coherent_state:3"):
        search_state(P, colouring, Moves.build([(1, 2)]), attempts=3, seed=1)


@pytest.mark.slow
def test_p8_halfspace_state_has_a_disconnected_ascending_link(p8):
    P, colouring, state, moves = p8

    link = ascending_link(nerve(P, max_dim=1), colouring, state, moves, 1)
    check = check_link(link, 1, 100)

    assert check.nonempty
    assert not check.connected
    assert check.level == 0


@pytest.mark.slow
def test_p8_searched_state_verdict_agrees_with_the_search(p8, seed):
    P, colouring, _, moves = p8

    result = search_state(P, colouring, moves, attempts=2, seed=seed)
    report = check_all_links(P, colouring, result.state, moves, k=1)

    assert is_balanced(colouring, result.state)
    assert report.passed == result.connected
    assert len(report.failures) == result.disconnected
