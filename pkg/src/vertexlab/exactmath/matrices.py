"""Exact determinants: Gaussian elimination over fields, Bareiss over rings.

Integer and UniPoly matrices go through fraction-free (Bareiss) elimination,
which needs only exact divisions that are guaranteed to succeed and avoids
coefficient blowup.  Field entries (Fraction, FieldScalar, series) go through
plain exact elimination with first-nonzero pivoting.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import NonSquare
from .polys import UniPoly


class ScalarMatrix:
    """Dense rectangular matrix of exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ScalarMatrix is immutable")

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"ScalarMatrix({self.entries!r})"


def _as_rows(matrix):
    if isinstance(matrix, ScalarMatrix):
        if matrix.rows != matrix.cols:
            raise NonSquare(f"{matrix.rows}x{matrix.cols} matrix")
        return [list(row) for row in matrix.entries]
    rows = [list(row) for row in matrix]
    if any(len(row) != len(rows) for row in rows):
        raise NonSquare("matrix is not square")
    return rows


def det_exact(matrix):
    """Exact determinant of a square matrix of ring or field scalars."""
    rows = _as_rows(matrix)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    sample = rows[0][0]
    if isinstance(sample, UniPoly) or all(
        isinstance(x, int) for row in rows for x in row
    ):
        return _det_bareiss(rows)
    return _det_field(rows)


def _det_field(rows):
    n = len(rows)
    sign = 1
    det = None
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return _zero_like(rows[0][0])
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        det = pivot if det is None else det * pivot
        for r in range(col + 1, n):
            factor = rows[r][col] / pivot
            if factor == 0:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    if sign < 0:
        det = -det
    return det


def _det_bareiss(rows):
    """Fraction-free elimination; entries must form an integral domain."""
    n = len(rows)
    poly_mode = isinstance(rows[0][0], UniPoly)
    if poly_mode:
        rows = [[x if isinstance(x, UniPoly) else UniPoly((x,)) for x in row] for row in rows]
    sign = 1
    prev = UniPoly((1,)) if poly_mode else 1
    for col in range(n - 1):
        pivot_row = None
        for r in range(col, n):
            if rows[r][col] != 0 and (not poly_mode or not rows[r][col].is_zero()):
                pivot_row = r
                break
        if pivot_row is None:
            return UniPoly() if poly_mode else 0
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                num = rows[r][c] * pivot - rows[r][col] * rows[col][c]
                if poly_mode:
                    rows[r][c] = num.exact_div(prev)
                else:
                    quotient, remainder = divmod(num, prev)
                    assert remainder == 0
                    rows[r][c] = quotient
            rows[r][col] = UniPoly() if poly_mode else 0
        prev = pivot
    det = rows[n - 1][n - 1]
    return -det if sign < 0 else det


def det_cofactor(matrix):
    """Cofactor-expansion determinant; the small-matrix reference oracle."""
    rows = _as_rows(matrix)
    return _cofactor(rows)


def _cofactor(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * _cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _zero_like(sample):
    if isinstance(sample, UniPoly):
        return UniPoly()
    if isinstance(sample, int):
        return 0
    return sample - sample
