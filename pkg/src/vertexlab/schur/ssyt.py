"""Semi-standard Young tableaux and the monomial expansion of s_lambda.

Tableaux are stored in matrix (English) orientation: row 0 is the longest
row, entries increase weakly left to right and strictly down each column.
"""

from __future__ import annotations

from collections import Counter

from ..errors import InvalidTriangle
from .partitions import normalize


class SSYT:
    __slots__ = ("shape", "rows")

    def __init__(self, rows, check: bool = True):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", normalize(len(row) for row in rows))
        if check:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("SSYT is immutable")

    def validate(self):
        rows = self.rows
        if len(self.shape) != len([row for row in rows if row]):
            raise InvalidTriangle("empty rows inside the shape")
        for row in rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise InvalidTriangle("row not weakly increasing")
            if any(x < 1 for x in row):
                raise InvalidTriangle("entries must be positive")
        for upper, lower in zip(rows, rows[1:]):
            for a, b in zip(upper, lower):
                if a >= b:
                    raise InvalidTriangle("column not strictly increasing")

    def content(self) -> Counter:
        return Counter(x for row in self.rows for x in row)

    def monomial_exponents(self, n: int) -> tuple:
        content = self.content()
        return tuple(content.get(i, 0) for i in range(1, n + 1))

    def __eq__(self, other):
        if not isinstance(other, SSYT):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SSYT({self.rows!r})"


def ssyt_enumerate(shape, n: int):
    """Yield every tableau of the given shape with entries in 1..n."""
    shape = normalize(shape)
    if not shape:
        yield SSYT(())
        return
    if len(shape) > n:
        return

    rows = [[0] * width for width in shape]

    def cells():
        for r, width in enumerate(shape):
            for c in range(width):
                yield r, c

    cell_list = list(cells())

    def fill(k: int):
        if k == len(cell_list):
            yield SSYT(tuple(tuple(row) for row in rows), check=False)
            return
        r, c = cell_list[k]
        low = 1
        if c > 0:
            low = max(low, rows[r][c - 1])
        if r > 0:
            low = max(low, rows[r - 1][c] + 1)
        for value in range(low, n + 1):
            rows[r][c] = value
            yield from fill(k + 1)
        rows[r][c] = 0

    yield from fill(0)


def schur_monomials(shape, n: int) -> dict:
    """Exponent-vector -> multiplicity dictionary of s_shape in n variables."""
    out = {}
    for tableau in ssyt_enumerate(shape, n):
        expo = tableau.monomial_exponents(n)
        out[expo] = out.get(expo, 0) + 1
    return out


def schur_ssyt(shape, zs):
    """Evaluate s_shape by summing tableau monomials at the given point."""
    zs = list(zs)
    total = 0
    for expo, mult in schur_monomials(shape, len(zs)).items():
        term = mult
        for z, e in zip(zs, expo):
            for _ in range(e):
                term = term * z
        total = term + total
    return total


def triangle_to_ssyt(rows) -> SSYT:
    """Read a monotone triangle as a chain of shapes, smallest row first.

    Row k (length n-k) sorted decreasingly is the shape filled with entries
    <= n-k; each cell records the first chain stage that covers it.
    """
    chain = [tuple(sorted(row, reverse=True)) for row in rows]
    chain.reverse()  # chain[i] now has i+1 parts
    full = chain[-1]
    out = [[None] * width for width in full]
    for stage, shape in enumerate(chain, start=1):
        for r, width in enumerate(shape):
            for c in range(width):
                if out[r][c] is None:
                    out[r][c] = stage
    return SSYT(tuple(tuple(row) for row in out))
