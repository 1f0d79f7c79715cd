"""Seeded rational parameter draws for randomized identity checks.

Numerators and denominators are capped at 13: small enough that exact
arithmetic stays fast, generic enough that degenerate draws are rare.
Degenerate draws are rejected and resampled; the rejection count is kept so
reports can log it.
"""

from __future__ import annotations

import random
from fractions import Fraction

MAX_PART = 13


class RationalSampler:
    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)
        self.rejections = 0

    def rational(self, nonzero: bool = True, positive: bool = False) -> Fraction:
        while True:
            num = self._rng.randint(-MAX_PART, MAX_PART)
            den = self._rng.randint(1, MAX_PART)
            if positive:
                num = abs(num)
            value = Fraction(num, den)
            if nonzero and value == 0:
                self.rejections += 1
                continue
            return value

    def distinct_rationals(self, count: int, avoid=(), positive: bool = False):
        """Draw pairwise-distinct nonzero rationals, also avoiding ``avoid``."""
        taken = set(avoid)
        out = []
        while len(out) < count:
            value = self.rational(nonzero=True, positive=positive)
            if value in taken:
                self.rejections += 1
                continue
            taken.add(value)
            out.append(value)
        return out

    def izergin_parameters(self, n: int):
        """Draw (q, xs, ys) generic for the n-point determinant formula.

        Rejects q in {0, 1, -1}, repeated spectral parameters, and any pair
        with x_i = y_j or q*x_i = y_j/q.
        """
        while True:
            q = self.rational()
            if q == 1 or q == -1:
                self.rejections += 1
                continue
            break
        while True:
            values = self.distinct_rationals(2 * n)
            xs, ys = values[:n], values[n:]
            if any(q * x == y / q for x in xs for y in ys):
                self.rejections += 1
                continue
            return q, xs, ys
