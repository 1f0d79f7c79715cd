"""Integer partitions with implicit zero padding."""

from __future__ import annotations


def normalize(shape) -> tuple:
    """Drop trailing zeros; reject increases and negative parts."""
    parts = list(shape)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {shape}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not weakly decreasing: {shape}")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(int(p) for p in parts)


def size(shape) -> int:
    return sum(shape)


def padded(shape, length: int) -> tuple:
    parts = normalize(shape)
    if len(parts) > length:
        raise ValueError(f"{shape} has more than {length} parts")
    return parts + (0,) * (length - len(parts))


def partitions_upto(max_size: int, max_parts=None, max_part=None):
    """All partitions of size <= max_size under the given bounds."""
    for total in range(max_size + 1):
        yield from partitions_of(total, max_parts=max_parts, max_part=max_part)


def partitions_of(total: int, max_parts=None, max_part=None):
    limit_parts = total if max_parts is None else max_parts
    limit_part = total if max_part is None else max_part

    def rec(remaining, largest, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(total, limit_part, limit_parts)


def fits_box(shape, rows: int, cols: int) -> bool:
    parts = normalize(shape)
    return len(parts) <= rows and (not parts or parts[0] <= cols)


def parse_shape(text: str) -> tuple:
    """Parse a comma-joined shape like '2,1'; empty string is the empty shape."""
    text = text.strip()
    if not text:
        return ()
    return normalize(int(piece) for piece in text.split(","))


def shape_str(shape) -> str:
    return ",".join(str(p) for p in normalize(shape))


def staircase_lambda(n: int) -> tuple:
    """The doubled staircase (n-1, n-1, n-2, n-2, ..., 1, 1)."""
    out = []
    for k in range(n - 1, 0, -1):
        out.extend((k, k))
    return tuple(out)
