"""Schur polynomials four ways, plus the identities tying them together."""

from .cauchy import (
    cauchy_check,
    cauchy_lhs,
    cauchy_rhs,
    crossing_weight,
    strip_with_crossing,
    telescoping_identity,
)
from .classical import (
    asm_count,
    asm_count_via_schur,
    complete_homogeneous,
    dim_eval,
    schur_bialternant,
    schur_jacobi_trudi,
)
from .fivevertex import (
    PathConfigFiveVertex,
    enumerate_five_vertex,
    extended_Z_direct,
    extended_prefactor,
    five_vertex_Z,
    five_vertex_prefactor,
    h_alpha_series,
    lgv_determinant,
    path_to_ssyt,
    single_path_weight,
    ssyt_to_path,
)
from .icepoint import ice_point_identification
from .partitions import (
    fits_box,
    normalize,
    padded,
    parse_shape,
    partitions_of,
    partitions_upto,
    shape_str,
    size,
    staircase_lambda,
)
from .ssyt import SSYT, schur_monomials, schur_ssyt, ssyt_enumerate, triangle_to_ssyt

__all__ = [
    "cauchy_check",
    "cauchy_lhs",
    "cauchy_rhs",
    "crossing_weight",
    "strip_with_crossing",
    "telescoping_identity",
    "asm_count",
    "asm_count_via_schur",
    "complete_homogeneous",
    "dim_eval",
    "schur_bialternant",
    "schur_jacobi_trudi",
    "PathConfigFiveVertex",
    "enumerate_five_vertex",
    "extended_Z_direct",
    "extended_prefactor",
    "five_vertex_Z",
    "five_vertex_prefactor",
    "h_alpha_series",
    "lgv_determinant",
    "path_to_ssyt",
    "single_path_weight",
    "ssyt_to_path",
    "ice_point_identification",
    "fits_box",
    "normalize",
    "padded",
    "parse_shape",
    "partitions_of",
    "partitions_upto",
    "shape_str",
    "size",
    "staircase_lambda",
    "SSYT",
    "schur_monomials",
    "schur_ssyt",
    "ssyt_enumerate",
    "triangle_to_ssyt",
]
