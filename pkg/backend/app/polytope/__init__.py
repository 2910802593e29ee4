from app.polytope.cusps import CuspCount, cusp_bases, cusp_count, link_colouring, link_mask, vertex_type_census
from app.polytope.examples import (
    cube_colouring,
    cube_polytope,
    polygon_colouring,
    polygon_with_ideal_vertex,
    pyramid_colouring,
    pyramid_polytope,
    square_colouring,
    square_polytope,
)
from app.polytope.faces import face_numbers, spanning_sets, spans_simplex
from app.polytope.gosset import e8_minimal_vectors, frame_colouring, gosset_p8, halfspace_statuses
from app.polytope.models import Colouring, IdealVertex, Polytope, ValidationReport
from app.polytope.validation import validate_colouring, validate_polytope

__all__ = [
    "Colouring",
    "CuspCount",
    "IdealVertex",
    "Polytope",
    "ValidationReport",
    "cube_colouring",
    "cube_polytope",
    "cusp_bases",
    "cusp_count",
    "e8_minimal_vectors",
    "face_numbers",
    "frame_colouring",
    "gosset_p8",
    "halfspace_statuses",
    "link_colouring",
    "link_mask",
    "polygon_colouring",
    "polygon_with_ideal_vertex",
    "pyramid_colouring",
    "pyramid_polytope",
    "spanning_sets",
    "spans_simplex",
    "square_colouring",
    "square_polytope",
    "validate_colouring",
    "validate_polytope",
    "vertex_type_census",
]
