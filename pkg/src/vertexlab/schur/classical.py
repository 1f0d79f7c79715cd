"""Classical Schur evaluations: bialternant ratio, Jacobi-Trudi determinant,
principal specialization, and the ASM counting formula they imply.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..errors import RepeatedVariable
from ..exactmath.matrices import det_exact
from ..exactmath.series import TruncatedSeries, geometric_inverse_factor
from .partitions import normalize, padded, staircase_lambda


def _inv(value):
    if hasattr(value, "inverse"):
        return value.inverse()
    return Fraction(1) / Fraction(value)


def schur_bialternant(shape, zs):
    """det(z_i^(lambda_j + n - j)) divided by the Vandermonde determinant."""
    zs = list(zs)
    n = len(zs)
    shape = normalize(shape)
    if len(shape) > n:
        return 0 * zs[0] if zs else 0
    for i in range(n):
        if zs[i] == 0:
            raise RepeatedVariable("variables must be nonzero")
        for j in range(i + 1, n):
            if zs[i] == zs[j]:
                raise RepeatedVariable("variables must be distinct")
    lam = padded(shape, n)
    matrix = [[zs[i] ** (lam[j] + n - j - 1) for j in range(n)] for i in range(n)]
    vandermonde = 1
    for i in range(n):
        for j in range(i + 1, n):
            vandermonde = vandermonde * (zs[i] - zs[j])
    return det_exact(matrix) * _inv(vandermonde)


def complete_homogeneous(zs, max_degree: int):
    """h_0 .. h_max as coefficients of 1 / prod(1 - u z_i)."""
    zs = list(zs)
    denom = TruncatedSeries.constant(Fraction(1), 1, max_degree)
    for z in zs:
        factor = TruncatedSeries(1, max_degree, {(0,): Fraction(1), (1,): -z})
        denom = denom * factor
    series = denom.invert()
    return [series.coefficient((k,)) for k in range(max_degree + 1)]


def schur_jacobi_trudi(shape, zs):
    """det(h_{lambda_j - j + i}) over i, j = 1..n, with h_k = 0 for k < 0."""
    zs = list(zs)
    n = len(zs)
    shape = normalize(shape)
    if len(shape) > n:
        return 0
    lam = padded(shape, n)
    top = (lam[0] if lam else 0) + n
    h = complete_homogeneous(zs, top)

    def h_at(k: int):
        if k < 0:
            return 0 * zs[0] if zs else 0
        return h[k]

    matrix = [
        [h_at(lam[j] - (j + 1) + (i + 1)) for j in range(n)] for i in range(n)
    ]
    if not matrix:
        return 1
    return det_exact(matrix)


def dim_eval(shape, n: int) -> int:
    """Number of tableaux with entries in 1..n: the principal specialization
    prod_{i<j} (lambda_i - i - lambda_j + j) / (j - i)."""
    lam = padded(shape, n)
    value = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            value *= Fraction(lam[i - 1] - i - lam[j - 1] + j, j - i)
    assert value.denominator == 1
    return int(value)


def asm_count(n: int) -> int:
    """prod_{i=0}^{n-1} (3i+1)! / (n+i)!, exactly."""
    numerator = 1
    denominator = 1
    for i in range(n):
        numerator *= factorial(3 * i + 1)
        denominator *= factorial(n + i)
    assert numerator % denominator == 0
    return numerator // denominator


def asm_count_via_schur(n: int) -> int:
    """The same count through the doubled-staircase specialization:
    3^{-n(n-1)/2} * dim of the staircase shape in 2n variables."""
    value = Fraction(dim_eval(staircase_lambda(n), 2 * n), 3 ** (n * (n - 1) // 2))
    assert value.denominator == 1
    return int(value)
