"""Littlewood-Richardson expansion by leading-term subtraction.

Expand s_lam * s_mu into monomials via tableau sums in enough variables,
then repeatedly strip the lexicographically greatest exponent vector: it is
always a partition, its coefficient is the next expansion coefficient, and
subtracting that multiple of the corresponding Schur expansion terminates
at zero.  This route is independent of all puzzle conventions.
"""

from __future__ import annotations

from ..caps import LR_ORACLE_CAP
from ..errors import CapExceeded
from ..schur.partitions import normalize, size
from ..schur.ssyt import schur_monomials


class LRResult:
    __slots__ = ("left", "right", "expansion")

    def __init__(self, left, right, expansion):
        object.__setattr__(self, "left", normalize(left))
        object.__setattr__(self, "right", normalize(right))
        object.__setattr__(self, "expansion", dict(expansion))

    def __setattr__(self, name, value):
        raise AttributeError("LRResult is immutable")

    def __eq__(self, other):
        if not isinstance(other, LRResult):
            return NotImplemented
        return (
            self.left == other.left
            and self.right == other.right
            and self.expansion == other.expansion
        )

    def __repr__(self):
        return f"LRResult({self.left} * {self.right} = {self.expansion})"

    def to_json(self) -> dict:
        return {
            "lambda": list(self.left),
            "mu": list(self.right),
            "expansion": [
                {"nu": list(nu), "coefficient": c}
                for nu, c in sorted(self.expansion.items())
            ],
        }


def _multiply(poly_a: dict, poly_b: dict) -> dict:
    out = {}
    for ea, ca in poly_a.items():
        for eb, cb in poly_b.items():
            expo = tuple(x + y for x, y in zip(ea, eb))
            out[expo] = out.get(expo, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def lr_oracle(lam, mu, cap: int = LR_ORACLE_CAP) -> LRResult:
    lam, mu = normalize(lam), normalize(mu)
    if size(lam) + size(mu) > cap:
        raise CapExceeded(f"|lambda| + |mu| = {size(lam) + size(mu)} > {cap}")
    nvars = max(1, len(lam) + len(mu))
    product = _multiply(
        schur_monomials(lam, nvars), schur_monomials(mu, nvars)
    )
    expansion = {}
    while product:
        leading = max(product)
        coefficient = product[leading]
        if tuple(sorted(leading, reverse=True)) != leading:
            raise AssertionError(f"leading term {leading} is not a partition")
        if coefficient < 0:
            raise AssertionError(f"negative coefficient at {leading}")
        nu = normalize(leading)
        expansion[nu] = coefficient
        correction = {
            e: coefficient * c for e, c in schur_monomials(nu, nvars).items()
        }
        for expo, c in correction.items():
            remaining = product.get(expo, 0) - c
            if remaining:
                product[expo] = remaining
            else:
                product.pop(expo, None)
    return LRResult(lam, mu, expansion)
