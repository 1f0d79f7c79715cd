"""The sixth-root-of-unity specialization of the DWBC partition function.

At q = w (so q - 1/q = 2w - 1, which squares to -3) the partition function
becomes, up to the explicit prefactor
(prod_j y_j) * q^{-n(n-1)/2} (q - 1/q)^n, the Schur polynomial of the
doubled staircase evaluated at the 2n points (-q x_1, .., -q x_n, y_1, ..,
y_n).  Everything stays inside Q(w), so the identity is checked exactly at
generic rational parameters.  (The prod_j y_j factor matches the weight
normalization c1 = (q - 1/q) y used throughout; see the n = 1 case, where
the single vertex contributes exactly (q - 1/q) y_1.)
"""

from __future__ import annotations

from ..errors import DegenerateParameters
from ..exactmath.fields import QW, FieldScalar, omega
from ..sixvertex.izergin import izergin
from .classical import schur_bialternant
from .partitions import staircase_lambda


def ice_point_identification(n: int, xs, ys) -> bool:
    """Exact check of the Schur form of Z_n at q = w."""
    q = omega()
    xs = [FieldScalar.of(x, QW) for x in xs]
    ys = [FieldScalar.of(y, QW) for y in ys]
    lhs = izergin(q, xs, ys)

    variables = [-(q * x) for x in xs] + list(ys)
    for i in range(len(variables)):
        for j in range(i + 1, len(variables)):
            if variables[i] == variables[j]:
                raise DegenerateParameters("Schur evaluation point collision")
    shape = staircase_lambda(n)
    schur_value = schur_bialternant(shape, variables)
    prefactor = (q ** (-(n * (n - 1) // 2))) * ((q - q.inverse()) ** n)
    for y in ys:
        prefactor = prefactor * y
    return lhs == prefactor * schur_value
