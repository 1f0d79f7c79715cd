"""Exact arithmetic substrate: fields, polynomials, series, determinants."""

from .fields import (
    Q,
    QI,
    QW,
    FieldScalar,
    field_arith,
    imag_unit,
    omega,
    q_minus_qinv,
)
from .matrices import ScalarMatrix, det_cofactor, det_exact
from .polys import UniPoly, one_plus_t
from .series import TruncatedSeries, geometric_inverse_factor, series_ops

__all__ = [
    "Q",
    "QI",
    "QW",
    "FieldScalar",
    "field_arith",
    "imag_unit",
    "omega",
    "q_minus_qinv",
    "ScalarMatrix",
    "det_cofactor",
    "det_exact",
    "UniPoly",
    "one_plus_t",
    "TruncatedSeries",
    "geometric_inverse_factor",
    "series_ops",
]
