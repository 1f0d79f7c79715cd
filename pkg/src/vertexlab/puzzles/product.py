"""Schur product expansion assembled from puzzle counts."""

from __future__ import annotations

from ..caps import LR_ORACLE_CAP
from ..errors import CapExceeded
from ..schur.partitions import normalize, partitions_of, size
from .oracle import LRResult
from .puzzle import count_puzzles


def auto_box(lam, mu):
    """The smallest box guaranteed to hold every shape in the expansion."""
    lam, mu = normalize(lam), normalize(mu)
    k = max(1, len(lam) + len(mu))
    width = max(1, (lam[0] if lam else 0) + (mu[0] if mu else 0))
    return k, k + width


def product_rule(lam, mu, total=None, k=None, cap: int = LR_ORACLE_CAP) -> LRResult:
    """Expand s_lam * s_mu by counting puzzles over all candidate shapes.

    With no box given, the box is sized so that no shape of the true
    expansion can fall outside it; the result then matches lr_oracle
    exactly.  With an explicit box, shapes outside it are simply absent.
    """
    lam, mu = normalize(lam), normalize(mu)
    degree = size(lam) + size(mu)
    if degree > cap:
        raise CapExceeded(f"|lambda| + |mu| = {degree} > {cap}")
    if (total is None) != (k is None):
        raise ValueError("give both box parameters or neither")
    if total is None:
        k, total = auto_box(lam, mu)
    expansion = {}
    for nu in partitions_of(degree, max_parts=k, max_part=total - k):
        count = count_puzzles(lam, mu, nu, total, k)
        if count:
            expansion[normalize(nu)] = count
    return LRResult(lam, mu, expansion)
