"""The Cauchy summation identity, verified as a truncated-series equality,
plus its finite-width two-row telescoping form.

sum_lambda s_lambda(w_1..w_m) s_lambda(z_1..z_n) = prod 1/(1 - w_i z_j):
each shape contributes at bidegree (|lambda|, |lambda|), so truncating at
|lambda| <= D captures the full series through total degree 2D.  Shapes
with more than min(m, n) rows vanish and are skipped.

The finite-width form pairs one row of each color of width p through a
two-color crossing vertex at the east end; summing the strip exactly gives

    (1 - w z) * sum_{k < p} s_(k)(w) s_(k)(z) + (w z)^p = 1.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactmath.series import TruncatedSeries
from .partitions import partitions_upto
from .ssyt import schur_monomials, schur_ssyt

# Two-color crossing weights, keyed (green_in, red_in, green_out, red_out).
# "1 - wz" is represented by the pair (coefficient of 1, coefficient of wz).
CROSSING_KEYS = {
    (1, 1, 1, 1): "pass",
    (0, 0, 0, 0): "one_minus_wz",
    (0, 1, 0, 1): "z",
    (1, 0, 1, 0): "w",
    (1, 1, 0, 0): "annihilate",
    (0, 0, 1, 1): "create",
}


def crossing_weight(key, w, z):
    name = CROSSING_KEYS.get(key)
    if name is None:
        return 0
    if name == "one_minus_wz":
        return 1 - w * z
    if name == "z":
        return z
    if name == "w":
        return w
    return 1  # pass / annihilate / create


def _schur_series(shape, var_indices, num_vars, degree):
    coeffs = {}
    for expo, mult in schur_monomials(shape, len(var_indices)).items():
        full = [0] * num_vars
        for idx, e in zip(var_indices, expo):
            full[idx] = e
        coeffs[tuple(full)] = Fraction(mult)
    return TruncatedSeries(num_vars, degree, coeffs)


def cauchy_lhs(m: int, n: int, shape_cap: int) -> TruncatedSeries:
    """sum over shapes of size <= shape_cap of s(w-block) * s(z-block)."""
    num_vars = m + n
    degree = 2 * shape_cap
    total = TruncatedSeries(num_vars, degree, {})
    w_block = list(range(m))
    z_block = list(range(m, m + n))
    for shape in partitions_upto(shape_cap, max_parts=min(m, n)):
        left = _schur_series(shape, w_block, num_vars, degree)
        right = _schur_series(shape, z_block, num_vars, degree)
        total = total + left * right
    return total


def cauchy_rhs(m: int, n: int, shape_cap: int) -> TruncatedSeries:
    """prod over pairs of 1/(1 - w_i z_j) expanded to total degree 2*cap."""
    num_vars = m + n
    degree = 2 * shape_cap
    total = TruncatedSeries.constant(Fraction(1), num_vars, degree)
    for i in range(m):
        for j in range(n):
            pair = {}
            for k in range(shape_cap + 1):
                expo = [0] * num_vars
                expo[i] = k
                expo[m + j] = k
                pair[tuple(expo)] = Fraction(1)
            total = total * TruncatedSeries(num_vars, degree, pair)
    return total


def cauchy_check(m: int, n: int, shape_cap: int) -> bool:
    return cauchy_lhs(m, n, shape_cap) == cauchy_rhs(m, n, shape_cap)


def strip_with_crossing(p: int, w, z):
    """Exact sum over the width-p two-row strip closed by one crossing.

    State entering a column is the pair of horizontal occupancies (green
    row, red row); a column may route both paths into its shared vertical
    edge, which forces both rows empty to the east of it.
    """
    states = {(1, 1): Fraction(1)}
    for _ in range(p):
        nxt = {}
        for (g, r), acc in states.items():
            # no crossing through the shared vertical edge
            weight = acc * (z if g else 1) * (w if r else 1)
            key = (g, r)
            nxt[key] = nxt.get(key, 0) + weight
            # green turns up, red turns down: both must be occupied
            if g and r:
                nxt[(0, 0)] = nxt.get((0, 0), 0) + acc
        states = nxt
    total = 0
    for (g, r), acc in states.items():
        total = total + acc * crossing_weight((g, r, 0, 0), w, z)
    return total


def telescoping_identity(p: int, w, z) -> bool:
    """The strip value is 1 and matches the truncated Cauchy sum."""
    strip = strip_with_crossing(p, w, z)
    partial = 0
    for k in range(p):
        partial = partial + schur_ssyt((k,), [w]) * schur_ssyt((k,), [z])
    closed = (1 - w * z) * partial + (w * z) ** p
    return strip == closed == 1
