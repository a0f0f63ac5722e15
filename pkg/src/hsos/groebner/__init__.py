from .engine import GroebnerBasis, buchberger, closure_defects, exact_divide, normal_form, s_polynomial
from .graded import graded_containment, graded_member, graded_piece_dim, graded_span, minimal_generator_count
from .ideal import (
    Ideal,
    SocleTest,
    canonical,
    codimension,
    colon_ideal,
    colon_poly,
    contains,
    ideal_equal,
    intersect,
    is_complete_intersection,
    krull_dimension,
    maximal_ideal_associated,
)
