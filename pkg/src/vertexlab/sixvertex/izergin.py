"""The determinant evaluation of the domain-wall partition function.

All parameters live in one exact field (Fraction, or FieldScalar for the
Q(i) and Q(w) specializations).  Genericity preconditions are hard errors:
the formula is only claimed, and only evaluated, away from its poles.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateParameters
from ..exactmath.matrices import det_exact


def _inv(value):
    if hasattr(value, "inverse"):
        return value.inverse()
    return Fraction(1) / Fraction(value)


def check_izergin_parameters(q, xs, ys):
    xs, ys = list(xs), list(ys)
    n = len(xs)
    if len(ys) != n:
        raise DegenerateParameters("need equally many x and y parameters")
    if q == 0 or q * q == 1:
        raise DegenerateParameters("q must differ from 0, 1 and -1")
    for i in range(n):
        for j in range(n):
            if i < j and (xs[i] == xs[j] or ys[i] == ys[j]):
                raise DegenerateParameters("repeated spectral parameter")
            if xs[i] == ys[j]:
                raise DegenerateParameters("x_i = y_j collision")
            if q * xs[i] == _inv(q) * ys[j]:
                raise DegenerateParameters("q*x_i = y_j/q collision")


def izergin(q, xs, ys):
    """Closed n x n determinant form of the DWBC partition function.

    Equals the brute-force weighted sum with weights a = q*x - y/q,
    b = x - y, c1 = (q - 1/q)*y, c2 = (q - 1/q)*x at row/column parameters
    xs, ys.
    """
    check_izergin_parameters(q, xs, ys)
    xs, ys = list(xs), list(ys)
    n = len(xs)
    q_inv = _inv(q)
    c_factor = q - q_inv

    numerator = 1
    for j in range(n):
        numerator = numerator * ys[j]
    kernel_parts = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            part = (xs[i] - ys[j]) * (q * xs[i] - q_inv * ys[j])
            kernel_parts[i][j] = part
            numerator = numerator * part
    denominator = 1
    for i in range(n):
        for j in range(i + 1, n):
            denominator = denominator * (xs[i] - xs[j]) * (ys[j] - ys[i])
    matrix = [
        [c_factor * _inv(kernel_parts[i][j]) for j in range(n)] for i in range(n)
    ]
    return numerator * _inv(denominator) * det_exact(matrix)


def free_fermion_Z(xs, ys, imag):
    """Factorized partition function at q = i over Q(i).

    ``imag`` is the imaginary unit of the ambient field; the value is
    (2i)^n (-1)^{n(n-1)/2} prod_j y_j prod_{i<j} (x_i+x_j)(y_i+y_j).
    """
    xs, ys = list(xs), list(ys)
    n = len(xs)
    result = (2 * imag) ** n
    if (n * (n - 1) // 2) % 2:
        result = -result
    for y in ys:
        result = result * y
    for i in range(n):
        for j in range(i + 1, n):
            result = result * (xs[i] + xs[j]) * (ys[i] + ys[j])
    return result


def izergin_in_last_x(q, xs_head, ys, point, nodes=None):
    """Evaluate Z_n(x_n -> point) through Lagrange interpolation.

    Z_n is a polynomial of degree at most n-1 in x_n, so its values at n
    generic nodes determine it; this reaches specializations (x_n = y_n)
    where the determinant form itself is singular.
    """
    n = len(xs_head) + 1
    if nodes is None:
        nodes = generic_nodes(q, xs_head, ys, n)
    if len(nodes) != n:
        raise DegenerateParameters(f"need {n} interpolation nodes")
    values = [izergin(q, list(xs_head) + [t], ys) for t in nodes]
    return _lagrange_eval(nodes, values, point)


def generic_nodes(q, xs_head, ys, count):
    """Deterministic interpolation nodes clear of all formula poles."""
    nodes = []
    candidate = Fraction(14)
    zero = (q - q) if hasattr(q, "tag") else Fraction(0)
    while len(nodes) < count:
        t = zero + candidate
        try:
            check_izergin_parameters(q, list(xs_head) + [t], ys)
        except DegenerateParameters:
            pass
        else:
            if t not in nodes:
                nodes.append(t)
        candidate += 1
    return nodes


def _lagrange_eval(nodes, values, point):
    total = 0
    for r, t_r in enumerate(nodes):
        term = values[r]
        for s, t_s in enumerate(nodes):
            if s == r:
                continue
            term = term * (point - t_s) * _inv(t_r - t_s)
        total = term + total
    return total


def check_recurrence(q, xs, ys) -> bool:
    """Setting x_n = y_n reduces Z_n to an explicit multiple of Z_{n-1}."""
    xs, ys = list(xs), list(ys)
    n = len(xs)
    if n < 2:
        raise DegenerateParameters("recurrence needs n >= 2")
    q_inv = _inv(q)
    y_last = ys[-1]
    lhs = izergin_in_last_x(q, xs[:-1], ys, y_last)
    factor = (q - q_inv) * y_last
    for x in xs[:-1]:
        factor = factor * (q * x - q_inv * y_last)
    for y in ys[:-1]:
        factor = factor * (q * y_last - q_inv * y)
    rhs = factor * izergin(q, xs[:-1], ys[:-1])
    return lhs == rhs


def check_parameter_symmetry(q, xs, ys) -> bool:
    """Z_n is invariant under transposing adjacent x's and adjacent y's."""
    base = izergin(q, xs, ys)
    xs, ys = list(xs), list(ys)
    n = len(xs)
    for k in range(n - 1):
        swapped = ys[:]
        swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
        if izergin(q, xs, swapped) != base:
            return False
        swapped = xs[:]
        swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
        if izergin(q, swapped, ys) != base:
            return False
    return True
