from app.homology.betti import (
    FIELDS,
    IntegralHomology,
    as_chain_complex,
    betti,
    euler_characteristic,
    integral_homology,
    reduced_betti,
)
from app.homology.chains import ChainComplex, simplicial_chain_complex
from app.homology.collapse import Certificate, certify_contractible, collapse
from app.homology.components import UnionFind
from app.homology.presentation import (
    Presentation,
    certify_simply_connected,
    edge_path_presentation,
    one_skeleton,
    simplify,
)
from app.homology.simplicial import SimplicialComplex, full_subcomplex, restrict_to_mask
from app.homology.smith import matrix_rank, reduce_units, smith_invariants

__all__ = [
    "FIELDS",
    "Certificate",
    "ChainComplex",
    "IntegralHomology",
    "Presentation",
    "SimplicialComplex",
    "UnionFind",
    "as_chain_complex",
    "betti",
    "certify_contractible",
    "certify_simply_connected",
    "collapse",
    "edge_path_presentation",
    "euler_characteristic",
    "full_subcomplex",
    "integral_homology",
    "matrix_rank",
    "one_skeleton",
    "reduce_units",
    "reduced_betti",
    "restrict_to_mask",
    "simplicial_chain_complex",
    "simplify",
    "smith_invariants",
]
