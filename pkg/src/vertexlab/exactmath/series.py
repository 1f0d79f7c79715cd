"""Multivariate power series truncated by total degree.

Coefficients are exact: plain Fractions by default, but any exact scalar
supporting ring operations and division (e.g. FieldScalar) works.  All
products truncate to the series' maximum total degree, so identities proved
here hold degree by degree.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegreeMismatch, NonInvertibleConstantTerm


class TruncatedSeries:
    """Series in ``num_vars`` variables, kept to total degree <= ``max_degree``."""

    __slots__ = ("num_vars", "max_degree", "coeffs")

    def __init__(self, num_vars: int, max_degree: int, coeffs=None):
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "max_degree", max_degree)
        clean = {}
        for expo, c in (coeffs or {}).items():
            expo = tuple(expo)
            if len(expo) != num_vars:
                raise DegreeMismatch("exponent arity does not match num_vars")
            if sum(expo) > max_degree:
                continue
            if c == 0:
                continue
            clean[expo] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(value, num_vars: int, max_degree: int) -> "TruncatedSeries":
        zero = (0,) * num_vars
        return TruncatedSeries(num_vars, max_degree, {zero: value})

    @staticmethod
    def variable(index: int, num_vars: int, max_degree: int) -> "TruncatedSeries":
        expo = tuple(1 if k == index else 0 for k in range(num_vars))
        return TruncatedSeries(num_vars, max_degree, {expo: Fraction(1)})

    # -- helpers ------------------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if self.num_vars != other.num_vars or self.max_degree != other.max_degree:
            raise DegreeMismatch("series disagree on variables or truncation")

    def coefficient(self, expo):
        return self.coeffs.get(tuple(expo), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.num_vars, self.max_degree)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for expo, c in other.coeffs.items():
            out[expo] = out.get(expo, 0) + c
        return TruncatedSeries(self.num_vars, self.max_degree, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(
            self.num_vars, self.max_degree, {e: -c for e, c in self.coeffs.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.num_vars, self.max_degree)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or not isinstance(
            other, TruncatedSeries
        ):
            if isinstance(other, TruncatedSeries):
                return NotImplemented
            out = {e: c * other for e, c in self.coeffs.items()}
            return TruncatedSeries(self.num_vars, self.max_degree, out)
        self._check(other)
        cap = self.max_degree
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > cap:
                    continue
                expo = tuple(a + b for a, b in zip(e1, e2))
                out[expo] = out.get(expo, 0) + c1 * c2
        return TruncatedSeries(self.num_vars, self.max_degree, out)

    __rmul__ = __mul__

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        zero = (0,) * self.num_vars
        c0 = self.coeffs.get(zero, Fraction(0))
        if c0 == 0:
            raise NonInvertibleConstantTerm("constant term is zero")
        if isinstance(c0, Fraction) or isinstance(c0, int):
            inv0 = Fraction(1) / Fraction(c0)
        else:
            inv0 = c0.inverse()
        out = {zero: inv0}
        # Solve (self * out) = 1 degree by degree.
        nonconst = [(e, c) for e, c in self.coeffs.items() if e != zero]
        for degree in range(1, self.max_degree + 1):
            for expo in _exponents_of_degree(self.num_vars, degree):
                acc = 0
                for e, c in nonconst:
                    rest = tuple(a - b for a, b in zip(expo, e))
                    if any(r < 0 for r in rest):
                        continue
                    prev = out.get(rest)
                    if prev is not None:
                        acc = acc + c * prev
                if acc != 0:
                    out[expo] = -(acc * inv0)
        return TruncatedSeries(self.num_vars, self.max_degree, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.num_vars, self.max_degree)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.num_vars, self.max_degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        items = sorted(self.coeffs.items())
        body = ", ".join(f"{e}: {c}" for e, c in items)
        return f"TruncatedSeries({self.num_vars}, {self.max_degree}, {{{body}}})"


def _exponents_of_degree(num_vars: int, degree: int):
    """Yield all exponent tuples with the given total degree."""
    if num_vars == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in _exponents_of_degree(num_vars - 1, degree - first):
            yield (first,) + rest


def series_ops(f: TruncatedSeries, g: TruncatedSeries, op: str) -> TruncatedSeries:
    """Apply add/mul to two series, or invert to the first one."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "invert":
        return f.invert()
    raise ValueError(f"unknown op {op!r}")


def geometric_inverse_factor(num_vars, max_degree, var_index, scale):
    """The series 1/(1 - scale * x_index), expanded to the truncation degree.

    Built directly from the geometric sum, which keeps products with it sparse.
    """
    out = {}
    for k in range(max_degree + 1):
        expo = tuple(k if j == var_index else 0 for j in range(num_vars))
        out[expo] = scale**k if k else Fraction(1)
    return TruncatedSeries(num_vars, max_degree, out)
