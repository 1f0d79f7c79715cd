"""Six-vertex configurations on a rectangular grid.

Grid conventions (used everywhere in the package):

 * vertices are indexed [row][col], row 0 at the top, col 0 at the left;
 * horizontal edge bit 1 means the arrow points east, 0 west;
 * vertical edge bit 1 means the arrow points up (towards row 0), 0 down.

With arrows at the four edges written (W, S, E, N), the six allowed local
states and their bit patterns are

    A1 (1,1,1,1)   A2 (0,0,0,0)   B1 (0,1,0,1)
    B2 (1,0,1,0)   C1 (1,0,0,1)   C2 (0,1,1,0)

i.e. a bit pattern is allowed iff W determines E and S determines N except
for the two C states, which flip all four.  In the occupied-edge (lattice
path) reading, bit 1 is an occupied edge, so paths travel north/east.
"""

from __future__ import annotations

from enum import IntEnum

from ..errors import InvalidConfig, InvalidInput


class VertexType(IntEnum):
    A1 = 0
    A2 = 1
    B1 = 2
    B2 = 3
    C1 = 4
    C2 = 5


# (W, S, E, N) arrow bits per vertex type.
VERTEX_EDGES = {
    VertexType.A1: (1, 1, 1, 1),
    VertexType.A2: (0, 0, 0, 0),
    VertexType.B1: (0, 1, 0, 1),
    VertexType.B2: (1, 0, 1, 0),
    VertexType.C1: (1, 0, 0, 1),
    VertexType.C2: (0, 1, 1, 0),
}

TYPE_FROM_EDGES = {bits: t for t, bits in VERTEX_EDGES.items()}


class SixVertexConfig:
    """An assignment of one VertexType per grid site, edge-consistent."""

    __slots__ = ("n_rows", "n_cols", "vertices")

    def __init__(self, vertices, check: bool = True):
        vertices = tuple(tuple(VertexType(v) for v in row) for row in vertices)
        object.__setattr__(self, "n_rows", len(vertices))
        object.__setattr__(self, "n_cols", len(vertices[0]) if vertices else 0)
        object.__setattr__(self, "vertices", vertices)
        if any(len(row) != self.n_cols for row in vertices):
            raise InvalidConfig("ragged vertex grid")
        if check:
            self.edge_grids()

    def __setattr__(self, name, value):
        raise AttributeError("SixVertexConfig is immutable")

    def __eq__(self, other):
        if not isinstance(other, SixVertexConfig):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"SixVertexConfig({self.n_rows}x{self.n_cols})"

    def type_at(self, row: int, col: int) -> VertexType:
        return self.vertices[row][col]

    def edge_grids(self):
        """Derive (horizontal, vertical) edge bit grids, checking consistency.

        horizontal[r][k] is the edge west of vertex (r, k) for k < n_cols and
        the east external edge for k = n_cols.  vertical[k][c] is the edge
        north of vertex (k, c) for k < n_rows and the south external edge for
        k = n_rows.
        """
        n_rows, n_cols = self.n_rows, self.n_cols
        horizontal = [[None] * (n_cols + 1) for _ in range(n_rows)]
        vertical = [[None] * n_cols for _ in range(n_rows + 1)]
        for r in range(n_rows):
            for c in range(n_cols):
                w, s, e, n = VERTEX_EDGES[self.vertices[r][c]]
                for grid, idx, bit in (
                    (horizontal[r], c, w),
                    (horizontal[r], c + 1, e),
                ):
                    if grid[idx] is None:
                        grid[idx] = bit
                    elif grid[idx] != bit:
                        raise InvalidConfig(
                            f"horizontal edge conflict at row {r}, col {c}"
                        )
                if vertical[r][c] is None:
                    vertical[r][c] = n
                elif vertical[r][c] != n:
                    raise InvalidConfig(f"vertical edge conflict at row {r}, col {c}")
                vertical[r + 1][c] = s
        return horizontal, vertical

    def boundary_bits(self):
        """Return (west, east, north, south) external edge bit vectors."""
        horizontal, vertical = self.edge_grids()
        west = tuple(horizontal[r][0] for r in range(self.n_rows))
        east = tuple(horizontal[r][self.n_cols] for r in range(self.n_rows))
        north = tuple(vertical[0][c] for c in range(self.n_cols))
        south = tuple(vertical[self.n_rows][c] for c in range(self.n_cols))
        return west, east, north, south

    def is_dwbc(self) -> bool:
        if self.n_rows != self.n_cols:
            return False
        west, east, north, south = self.boundary_bits()
        n = self.n_rows
        return (
            west == (1,) * n
            and east == (0,) * n
            and north == (1,) * n
            and south == (0,) * n
        )

    def require_dwbc(self):
        if not self.is_dwbc():
            raise InvalidConfig("configuration does not satisfy DWBC")

    def to_json(self) -> dict:
        return {
            "n_rows": self.n_rows,
            "n_cols": self.n_cols,
            "vertices": [[t.name for t in row] for row in self.vertices],
        }

    @staticmethod
    def from_json(data: dict) -> "SixVertexConfig":
        try:
            rows = data["vertices"]
            vertices = [[VertexType[name] for name in row] for row in rows]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed configuration JSON: {exc}")
        config = SixVertexConfig(vertices)
        if config.n_rows != data.get("n_rows", config.n_rows) or config.n_cols != data.get(
            "n_cols", config.n_cols
        ):
            raise InvalidInput("declared grid shape disagrees with vertices")
        return config

    def ascii_diagram(self) -> str:
        return "\n".join(" ".join(t.name for t in row) for row in self.vertices)
