"""Alternating-sign-matrix statistics and the one-parameter determinant
deformation that sums over all ASMs instead of just permutations.
"""

from __future__ import annotations

from fractions import Fraction

from ..caps import check_grid_size
from ..errors import InvalidASM, ZeroEntryAtMinusOne
from ..exactmath.polys import UniPoly
from .config import SixVertexConfig, VertexType
from .enumerate import enumerate_dwbc


def validate_asm(entries) -> tuple:
    """Check the alternating sign conditions; return entries as tuples."""
    entries = tuple(tuple(int(x) for x in row) for row in entries)
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise InvalidASM("matrix is not square")
    lines = [list(row) for row in entries] + [
        [entries[i][j] for i in range(n)] for j in range(n)
    ]
    for line in lines:
        signs = [x for x in line if x]
        if sum(line) != 1:
            raise InvalidASM("line sum differs from 1")
        for k, value in enumerate(signs):
            expected = 1 if k % 2 == 0 else -1
            if value != expected:
                raise InvalidASM("signs do not alternate starting from +1")
    return entries


def asm_statistics(entries):
    """Return (nu, mu): generalized inversions and the count of -1 entries.

    nu sums A[i][j] * A[i'][j'] over index pairs with i <= i' and j' < j;
    on a permutation matrix it is the inversion number and mu is 0.
    """
    entries = validate_asm(entries)
    n = len(entries)
    support = [
        (i, j, entries[i][j])
        for i in range(n)
        for j in range(n)
        if entries[i][j]
    ]
    nu = 0
    for i, j, value in support:
        for i2, j2, value2 in support:
            if i <= i2 and j2 < j:
                nu += value * value2
    mu = sum(1 for _, _, value in support if value == -1)
    return nu, mu


def asm_entries_of_config(config: SixVertexConfig):
    """The {-1,0,1} matrix of a DWBC configuration: C1 -> +1, C2 -> -1."""
    value = {VertexType.C1: 1, VertexType.C2: -1}
    return tuple(
        tuple(value.get(t, 0) for t in row) for row in config.vertices
    )


def lambda_determinant(matrix) -> UniPoly:
    """Deformed determinant: sum over size-n ASMs of
    t^nu(A) (1+t)^mu(A) prod M[i][j]^A[i][j], as a polynomial in t.

    Entries sitting under a -1 are inverted, so they must be nonzero.
    At t = -1 only permutation terms survive and the value is det(M).
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    check_grid_size(n)
    t = UniPoly((0, 1))
    one_plus = UniPoly((1, 1))
    total = UniPoly()
    for config in enumerate_dwbc(n):
        entries = asm_entries_of_config(config)
        nu, mu = asm_statistics(entries)
        scalar = Fraction(1)
        skip = False
        for i in range(n):
            for j in range(n):
                a = entries[i][j]
                if a == 0:
                    continue
                m = Fraction(rows[i][j])
                if a == 1:
                    if m == 0:
                        skip = True
                        break
                    scalar *= m
                else:
                    if m == 0:
                        raise ZeroEntryAtMinusOne(
                            f"zero entry at row {i}, col {j} under a -1"
                        )
                    scalar /= m
            if skip:
                break
        if skip:
            continue
        total = total + (t**nu) * (one_plus**mu) * scalar
    return total
