from app.characters.cohomology import choi_park_b1
from app.characters.conditions import (
    CaseConstruction,
    CuspConditions,
    CuspVerdict,
    PairCondition,
    all_surjectivity_conditions,
    case_cocycle,
    iota_star_matrix,
    pair_condition,
    surjectivity_conditions,
)
from app.characters.cusps import (
    CuspLoop,
    CuspTorus,
    cusp_keys,
    cusp_loops,
    cusp_tori,
    default_gram,
    evaluate,
    evaluate_torus,
)
from app.characters.lattice import KernelLattice, Systole, kernel_sublattice, primitive, short_vectors, systole
from app.characters.perturb import (
    TWO_PI,
    Character,
    FillingCertificate,
    PerturbResult,
    PerturbSequence,
    TwoPiCheck,
    character_from_cocycle,
    distinct_kernel_cusps,
    filling_certificate,
    perturb,
    perturb_sequence,
    two_pi_check,
)

__all__ = [
    "CaseConstruction",
    "Character",
    "CuspConditions",
    "CuspLoop",
    "CuspTorus",
    "CuspVerdict",
    "FillingCertificate",
    "KernelLattice",
    "PairCondition",
    "PerturbResult",
    "PerturbSequence",
    "Systole",
    "TWO_PI",
    "TwoPiCheck",
    "all_surjectivity_conditions",
    "case_cocycle",
    "character_from_cocycle",
    "choi_park_b1",
    "cusp_keys",
    "cusp_loops",
    "cusp_tori",
    "default_gram",
    "distinct_kernel_cusps",
    "evaluate",
    "evaluate_torus",
    "filling_certificate",
    "iota_star_matrix",
    "kernel_sublattice",
    "pair_condition",
    "perturb",
    "perturb_sequence",
    "primitive",
    "short_vectors",
    "surjectivity_conditions",
    "systole",
    "two_pi_check",
]
