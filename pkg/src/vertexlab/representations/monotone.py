"""Monotone triangles: row-by-row records of up arrows.

Row k of the triangle (k = 0 .. n-1, length n-k) lists the columns whose
vertical edge between vertex rows k and k+1 points up.  Row 0 is forced to
(1, .., n) by the boundary.  Rows strictly increase; successive rows
interlace weakly along both diagonal directions.
"""

from __future__ import annotations

from ..errors import InvalidTriangle
from ..sixvertex.config import TYPE_FROM_EDGES, SixVertexConfig


class MonotoneTriangle:
    __slots__ = ("n", "rows")

    def __init__(self, rows, check: bool = True):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        object.__setattr__(self, "n", len(rows))
        object.__setattr__(self, "rows", rows)
        if check:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("MonotoneTriangle is immutable")

    def validate(self):
        n, rows = self.n, self.rows
        if n < 1:
            raise InvalidTriangle("empty triangle")
        if rows[0] != tuple(range(1, n + 1)):
            raise InvalidTriangle("top row must be 1..n")
        for k, row in enumerate(rows):
            if len(row) != n - k:
                raise InvalidTriangle(f"row {k} must have {n - k} entries")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidTriangle(f"row {k} is not strictly increasing")
        for k in range(n - 1):
            upper, lower = rows[k], rows[k + 1]
            for idx, value in enumerate(lower):
                if not upper[idx] <= value <= upper[idx + 1]:
                    raise InvalidTriangle(
                        f"row {k + 1} entry {idx} breaks the interlacing"
                    )

    def __eq__(self, other):
        if not isinstance(other, MonotoneTriangle):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __le__(self, other):
        return all(
            a <= b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __repr__(self):
        return f"MonotoneTriangle({self.rows!r})"

    def to_json(self):
        return {"n": self.n, "triangle": [list(row) for row in self.rows]}

    @staticmethod
    def from_json(data):
        return MonotoneTriangle(data["triangle"])


def to_monotone(config: SixVertexConfig) -> MonotoneTriangle:
    config.require_dwbc()
    n = config.n_rows
    _, vertical = config.edge_grids()
    rows = []
    for level in range(n):
        rows.append(tuple(c + 1 for c in range(n) if vertical[level][c] == 1))
    return MonotoneTriangle(rows)


def from_monotone(triangle: MonotoneTriangle) -> SixVertexConfig:
    n = triangle.n
    levels = [set(row) for row in triangle.rows] + [set()]
    vertices = []
    for i in range(n):
        top, bottom = levels[i], levels[i + 1]
        row = []
        w = 1
        for c in range(1, n + 1):
            n_bit = 1 if c in top else 0
            s_bit = 1 if c in bottom else 0
            vtype = TYPE_FROM_EDGES.get((w, s_bit, w + s_bit - n_bit, n_bit))
            if vtype is None or not 0 <= w + s_bit - n_bit <= 1:
                raise InvalidTriangle(f"rows {i} and {i + 1} are incompatible")
            row.append(vtype)
            w = w + s_bit - n_bit
        if w != 0:
            raise InvalidTriangle(f"row {i} does not close at the east boundary")
        vertices.append(row)
    return SixVertexConfig(vertices)


def column_triangle(config: SixVertexConfig) -> MonotoneTriangle:
    """The transpose record: east arrows per column level, rows numbered
    from the bottom of the grid."""
    config.require_dwbc()
    n = config.n_rows
    horizontal, _ = config.edge_grids()
    rows = []
    for level in range(n):
        rows.append(
            tuple(
                sorted(n - r for r in range(n) if horizontal[r][level] == 1)
            )
        )
    return MonotoneTriangle(rows)
