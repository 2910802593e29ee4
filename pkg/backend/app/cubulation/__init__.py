from app.cubulation.complex import (
    CubeComplex,
    Orientation,
    build,
    chain_complex,
    euler_characteristic,
    euler_characteristic_from_nerve,
)
from app.cubulation.covers import (
    CoverGrowth,
    LefschetzRow,
    cover_boundary_components,
    cover_growth,
    cyclic_cover,
    deck_shift,
    poincare_lefschetz_check,
)
from app.cubulation.orientation import (
    ArrayCochain,
    OrientationCocycle,
    cocycle,
    edge_directions,
    orient,
    orientation_cocycle,
)

__all__ = [
    "ArrayCochain",
    "CoverGrowth",
    "CubeComplex",
    "LefschetzRow",
    "Orientation",
    "OrientationCocycle",
    "build",
    "chain_complex",
    "cocycle",
    "cover_boundary_components",
    "cover_growth",
    "cyclic_cover",
    "deck_shift",
    "edge_directions",
    "euler_characteristic",
    "euler_characteristic_from_nerve",
    "orient",
    "orientation_cocycle",
    "poincare_lefschetz_check",
]
