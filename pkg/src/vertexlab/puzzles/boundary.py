"""Binary boundary strings encoding partitions inside a k x (N-k) box.

Bit j (1-indexed) is set iff j lies in the occupancy set
{k + 1 - i + lambda_i : i = 1..k}; the empty shape has its k set bits flush
at the low end.  Decoding reads each part off the position of a set bit:
lambda_i = p_{k+1-i} - (k+1-i) for set-bit positions p_1 < .. < p_k.
"""

from __future__ import annotations

from ..errors import DoesNotFitBox
from ..schur.partitions import normalize, padded


def occupancy(shape, k: int) -> set:
    parts = padded(shape, k)
    return {k + 1 - i + parts[i - 1] for i in range(1, k + 1)}


class BoundaryString:
    __slots__ = ("bits", "ones_count")

    def __init__(self, bits):
        bits = tuple(1 if b else 0 for b in bits)
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "ones_count", sum(bits))

    def __setattr__(self, name, value):
        raise AttributeError("BoundaryString is immutable")

    def __len__(self):
        return len(self.bits)

    def __eq__(self, other):
        if not isinstance(other, BoundaryString):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return f"BoundaryString({''.join(map(str, self.bits))})"


def encode_partition(shape, k: int, total: int) -> BoundaryString:
    shape = normalize(shape)
    if len(shape) > k:
        raise DoesNotFitBox(f"{shape} has more than {k} parts")
    if shape and shape[0] > total - k:
        raise DoesNotFitBox(f"part {shape[0]} exceeds box width {total - k}")
    occ = occupancy(shape, k)
    return BoundaryString(1 if j in occ else 0 for j in range(1, total + 1))


def decode(string: BoundaryString) -> tuple:
    positions = [j + 1 for j, bit in enumerate(string.bits) if bit]
    k = len(positions)
    parts = [positions[k - i] - (k - i + 1) for i in range(1, k + 1)]
    return normalize(parts)
