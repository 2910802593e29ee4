import os

import pytest
from app.game import Moves, State
from app.polytope import (
    cube_colouring,
    cube_polytope,
    polygon_colouring,
    polygon_with_ideal_vertex,
    pyramid_colouring,
    pyramid_polytope,
    square_colouring,
    square_polytope,
)


def _run_slow() -> bool:
    return str(os.getenv("RUN_SLOW", "")).strip().lower() in {"1", "true", "yes", "on"}


def pytest_collection_modifyitems(config, items):
    if _run_slow():
        return
    skip_slow = pytest.mark.skip(reason="set RUN_SLOW=1 to run full-size E8 checks")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("DATA_DIR", str(tmp_path / "data"))
    monkeypatch.setenv("WORKER_CONCURRENCY", "1")
    for name in (
        "CELL_CAP",
        "TIETZE_BUDGET",
        "MAX_PALETTE",
        "PERTURB_MAX_DENOMINATOR",
        "PERTURB_MAX_NUMERATOR",
        "PERTURB_COEFFICIENT_BOX",
        "RANDOM_SEED",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def seed() -> int:
    return 20240611


def single_outward(num_facets: int) -> State:
    return State(tuple(facet == 0 for facet in range(num_facets)))


@pytest.fixture
def square():
    P = square_polytope()
    colouring = square_colouring()
    return P, colouring, single_outward(P.num_facets), Moves.discrete(colouring.palette_size)


@pytest.fixture
def cube():
    P = cube_polytope()
    colouring = cube_colouring()
    return P, colouring, single_outward(P.num_facets), Moves.discrete(colouring.palette_size)


@pytest.fixture
def pyramid():
    P = pyramid_polytope()
    colouring = pyramid_colouring()
    return P, colouring, single_outward(P.num_facets), Moves.discrete(colouring.palette_size)


@pytest.fixture
def pyramid_distinct():
    P = pyramid_polytope()
    colouring = pyramid_colouring(distinct_sides=True)
    return P, colouring, single_outward(P.num_facets), Moves.discrete(colouring.palette_size)


@pytest.fixture(params=[2, 3, 4, 5, 6])
def polygon(request):
    n = request.param
    P = polygon_with_ideal_vertex(n)
    colouring = polygon_colouring(n)
    return n, P, colouring, single_outward(P.num_facets), Moves.discrete(colouring.palette_size)


@pytest.fixture(scope="session")
def p8():
    from app.game import halfspace_state
    from app.polytope import frame_colouring, gosset_p8

    colouring = frame_colouring()
    return gosset_p8(), colouring, halfspace_state(), Moves.discrete(colouring.palette_size)
