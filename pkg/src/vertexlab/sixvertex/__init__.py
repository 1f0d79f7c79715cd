"""Six-vertex model core: configurations, enumeration, partition functions."""

from .config import VERTEX_EDGES, SixVertexConfig, VertexType
from .enumerate import count_dwbc, dwbc_boundary, enumerate_dwbc, enumerate_grid, vertex_counts
from .izergin import (
    check_izergin_parameters,
    check_parameter_symmetry,
    check_recurrence,
    free_fermion_Z,
    izergin,
    izergin_in_last_x,
)
from .ldet import asm_entries_of_config, asm_statistics, lambda_determinant, validate_asm
from .weights import (
    BoundarySpec,
    FiveVertex,
    SixExplicit,
    SixSymbolic,
    config_weight,
    exit_columns,
    partition_function_brute,
)
from .ybe import check_ybe, r_matrix, ybe_holds

__all__ = [
    "VERTEX_EDGES",
    "SixVertexConfig",
    "VertexType",
    "count_dwbc",
    "dwbc_boundary",
    "enumerate_dwbc",
    "enumerate_grid",
    "vertex_counts",
    "check_izergin_parameters",
    "check_parameter_symmetry",
    "check_recurrence",
    "free_fermion_Z",
    "izergin",
    "izergin_in_last_x",
    "asm_entries_of_config",
    "asm_statistics",
    "lambda_determinant",
    "validate_asm",
    "BoundarySpec",
    "FiveVertex",
    "SixExplicit",
    "SixSymbolic",
    "config_weight",
    "exit_columns",
    "partition_function_brute",
    "check_ybe",
    "r_matrix",
    "ybe_holds",
]
