import numpy as np
import pytest
from app.errors import DimensionBoundError, InputError
from app.homology import (
    Certificate,
    ChainComplex,
    Presentation,
    SimplicialComplex,
    betti,
    certify_contractible,
    certify_simply_connected,
    collapse,
    edge_path_presentation,
    euler_characteristic,
    full_subcomplex,
    integral_homology,
    matrix_rank,
    reduced_betti,
    simplicial_chain_complex,
    simplify,
    smith_invariants,
)
from app.homology.presentation import cyclic_reduce, free_reduce
from scipy import sparse
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

RP2 = [
    (1, 2, 3),
    (1, 3, 4),
    (1, 4, 5),
    (1, 5, 6),
    (1, 6, 2),
    (2, 3, 5),
    (3, 4, 6),
    (4, 5, 2),
    (5, 6, 3),
    (6, 2, 4),
]

DUNCE_HAT = [
    (4, 1, 2),
    (4, 2, 3),
    (5, 1, 3),
    (5, 1, 2),
    (6, 2, 3),
    (6, 1, 3),
    (7, 1, 3),
    (7, 2, 3),
    (8, 1, 2),
    (3, 4, 5),
    (2, 5, 6),
    (1, 6, 7),
    (2, 7, 8),
    (1, 4, 8),
    (4, 5, 6),
    (4, 6, 7),
    (4, 7, 8),
]

TETRAHEDRON_BOUNDARY = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def _random_complex(rng: np.random.Generator) -> SimplicialComplex:
    vertices = int(rng.integers(4, 8))
    count = int(rng.integers(1, 9))
    simplices = [tuple(rng.choice(vertices, size=int(rng.integers(1, 4)), replace=False).tolist()) for _ in range(count)]
    return SimplicialComplex.from_simplices(simplices)


def _dense(matrix) -> list[list[int]]:
    return np.asarray(matrix.toarray(), dtype=np.int64).tolist()


def _rank_mod_two(rows: list[list[int]]) -> int:
    work = [[value % 2 for value in row] for row in rows]
    rank = 0
    columns = len(work[0]) if work else 0
    for column in range(columns):
        pivot = next((i for i in range(rank, len(work)) if work[i][column]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][column]:
                work[i] = [(a + b) % 2 for a, b in zip(work[i], work[rank], strict=True)]
        rank += 1
    return rank


def _oracle_betti(K: SimplicialComplex, field: str) -> tuple[int, ...]:
    chain = simplicial_chain_complex(K)
    ranks = {}
    for d in range(1, chain.top_dim + 1):
        rows = _dense(chain.boundary(d))
        if not rows or not rows[0]:
            ranks[d] = 0
        elif field == "Q":
            ranks[d] = int(Matrix(rows).rank())
        else:
            ranks[d] = _rank_mod_two(rows)
    return tuple(chain.rank(d) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(chain.top_dim + 1))


def test_betti_numbers_match_dense_oracles_on_random_complexes(seed):
    rng = np.random.default_rng(seed)
    for _ in range(200):
        K = _random_complex(rng)
        assert betti(K, field="Q") == _oracle_betti(K, "Q")
        assert betti(K, field="Z2") == _oracle_betti(K, "Z2")
        assert sum((-1) ** d * value for d, value in enumerate(betti(K))) == euler_characteristic(K)


def test_smith_invariants_match_sympy_on_random_matrices(seed):
    rng = np.random.default_rng(seed)
    for _ in range(200):
        rows = rng.integers(-3, 4, size=(int(rng.integers(1, 6)), int(rng.integers(1, 6)))).tolist()
        expected = sorted(abs(int(value)) for value in invariant_factors(Matrix(rows), domain=ZZ) if int(value) != 0)

        assert list(smith_invariants(sparse.csc_matrix(np.array(rows, dtype=np.int64)))) == expected
        assert matrix_rank(sparse.csc_matrix(np.array(rows, dtype=np.int64))) == len(expected)


def test_matrix_rank_over_two_elements_ignores_even_entries():
    matrix = sparse.csc_matrix(np.array([[2, 0], [0, 1]], dtype=np.int64))

    assert matrix_rank(matrix, field="Z2") == 1
    assert matrix_rank(matrix, field="Q") == 2
    with pytest.raises(ValueError, match="unsupported_field:Z3"):
        matrix_rank(matrix, field="Z3")


def test_projective_plane_has_two_torsion():
    K = SimplicialComplex.from_simplices(RP2)

    assert K.f_vector() == (6, 15, 10)
    assert betti(K, field="Q") == (1, 0, 0)
    assert betti(K, field="Z2") == (1, 1, 1)
    homology = integral_homology(K)
    assert homology.ranks == (1, 0, 0)
    assert homology.torsion == ((), (2,), ())
    assert not homology.vanishes


def test_reduced_betti_of_a_point_and_of_two_points():
    point = SimplicialComplex.from_simplices([(0,)])
    pair = SimplicialComplex.from_simplices([(0,), (5,)])

    assert reduced_betti(point) == (0,)
    assert reduced_betti(pair) == (1,)


def test_cone_collapses_to_a_point():
    cone = SimplicialComplex.from_simplices([(0, 1, 9), (1, 2, 9), (2, 3, 9), (0, 3, 9)])

    assert collapse(cone) == {(9,)}
    assert certify_contractible(cone) is Certificate.CERTIFIED
    assert certify_simply_connected(cone) == (Certificate.CERTIFIED, "collapse")


def test_dunce_hat_is_acyclic_but_not_collapsible():
    K = SimplicialComplex.from_simplices(DUNCE_HAT)

    assert K.f_vector() == (8, 24, 17)
    assert reduced_betti(K) == (0, 0, 0)
    assert integral_homology(K, reduced=True).vanishes
    assert certify_contractible(K) is Certificate.UNKNOWN
    assert len(collapse(K)) == sum(K.f_vector())
    _, method = certify_simply_connected(K)
    assert method == "presentation"


def test_sphere_is_simply_connected_by_presentation():
    K = SimplicialComplex.from_simplices(TETRAHEDRON_BOUNDARY)

    presentation = edge_path_presentation(K)

    assert presentation.generators == (1, 2, 3)
    assert presentation.relators == ((1,), (2,), (3,), (1, 3, -2))
    assert certify_contractible(K) is Certificate.UNKNOWN
    assert certify_simply_connected(K) == (Certificate.CERTIFIED, "presentation")
    assert betti(K) == (1, 0, 1)


def test_projective_plane_presentation_is_not_trivialised():
    K = SimplicialComplex.from_simplices(RP2)

    assert certify_simply_connected(K) == (Certificate.UNKNOWN, "presentation")


def test_simplify_eliminates_generators_through_short_relators():
    result, moves = simplify(Presentation((1, 2, 3), ((1, 2), (2,), (3, 1))))

    assert result.is_trivial
    assert result.relators == ()
    assert moves == 3


def test_simplify_respects_the_budget():
    result, moves = simplify(Presentation((1, 2), ((1,), (2,))), budget=1)

    assert moves == 1
    assert result.generators == (2,)


def test_free_and_cyclic_reduction():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert cyclic_reduce((1, 2, -1)) == (2,)
    assert cyclic_reduce((-3, 1, 3)) == (1,)


def test_certificates_reject_empty_and_disconnected_complexes():
    with pytest.raises(InputError, match="empty_complex"):
        certify_contractible(SimplicialComplex.empty())
    with pytest.raises(InputError, match="disconnected_complex"):
        certify_simply_connected(SimplicialComplex.from_simplices([(0, 1), (2, 3)]))


def test_truncated_complex_refuses_top_degree_homology():
    K = SimplicialComplex.from_simplices(TETRAHEDRON_BOUNDARY, max_dim=1)

    assert K.truncated
    assert betti(K) == (1,)
    with pytest.raises(DimensionBoundError):
        betti(K, up_to=1)
    assert certify_contractible(K) is Certificate.UNKNOWN


def test_full_subcomplex_keeps_simplices_inside_the_subset():
    K = SimplicialComplex.from_simplices(TETRAHEDRON_BOUNDARY)

    sub = full_subcomplex(K, [0, 1, 2])

    assert sub.f_vector() == (3, 3, 1)
    assert full_subcomplex(K, []).is_empty


def test_chain_complex_boundaries_compose_to_zero():
    K = SimplicialComplex.from_simplices(RP2 + [(1, 2, 3, 7)])

    chain = simplicial_chain_complex(K)

    assert isinstance(chain, ChainComplex)
    assert chain.boundary_squares_vanish()
