"""Bijections between DWBC configurations and their companion objects."""

from .asm import (
    AsmMatrix,
    asm_to_config,
    config_asm_roundtrip_ok,
    config_to_asm,
    from_asm,
    to_asm,
)
from .bpd import Permutation, bpd_permutation, bruhat_leq, rook_structure, to_bpd
from .domino import aztec_cells, domino_oracle, dt_closed_form, dt_weighted_count
from .fpl import (
    check_two_colors_per_vertex,
    fpl_coloring,
    is_noncrossing,
    link_pattern,
    red_boundary_slots,
    refined_link_counts,
    rotate_pattern,
    rotation_invariant,
)
from .heights import HeightFunction, from_height, height_join, height_meet, to_height
from .monotone import MonotoneTriangle, column_triangle, from_monotone, to_monotone

__all__ = [
    "AsmMatrix",
    "asm_to_config",
    "config_asm_roundtrip_ok",
    "config_to_asm",
    "from_asm",
    "to_asm",
    "Permutation",
    "bpd_permutation",
    "bruhat_leq",
    "rook_structure",
    "to_bpd",
    "aztec_cells",
    "domino_oracle",
    "dt_closed_form",
    "dt_weighted_count",
    "check_two_colors_per_vertex",
    "fpl_coloring",
    "is_noncrossing",
    "link_pattern",
    "red_boundary_slots",
    "refined_link_counts",
    "rotate_pattern",
    "rotation_invariant",
    "HeightFunction",
    "from_height",
    "height_join",
    "height_meet",
    "to_height",
    "MonotoneTriangle",
    "column_triangle",
    "from_monotone",
    "to_monotone",
]
