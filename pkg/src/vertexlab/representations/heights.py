"""Height functions: the face labeling of a DWBC configuration.

Crossing an edge changes the height by +1 when the crossed arrow points to
the walker's left, -1 when to the right; the outer north-west face is pinned
to 0.  On the (n+1)x(n+1) face grid this forces h[i][0] = i, h[0][j] = j,
h[i][n] = n - i, h[n][j] = n - j with all neighbor differences +-1, and the
map to configurations is a bijection.
"""

from __future__ import annotations

from ..errors import InvalidHeight, SizeMismatch
from ..sixvertex.config import TYPE_FROM_EDGES, SixVertexConfig


class HeightFunction:
    __slots__ = ("n", "grid")

    def __init__(self, grid, check: bool = True):
        grid = tuple(tuple(int(x) for x in row) for row in grid)
        n = len(grid) - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "grid", grid)
        if check:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("HeightFunction is immutable")

    def validate(self):
        n, grid = self.n, self.grid
        if n < 1 or any(len(row) != n + 1 for row in grid):
            raise InvalidHeight("grid must be (n+1) x (n+1)")
        for i in range(n + 1):
            if grid[i][0] != i or grid[0][i] != i:
                raise InvalidHeight("north/west boundary must count up from 0")
            if grid[i][n] != n - i or grid[n][i] != n - i:
                raise InvalidHeight("south/east boundary must count down to 0")
        for i in range(n + 1):
            for j in range(n + 1):
                if i + 1 <= n and abs(grid[i + 1][j] - grid[i][j]) != 1:
                    raise InvalidHeight(f"vertical step at ({i},{j}) is not +-1")
                if j + 1 <= n and abs(grid[i][j + 1] - grid[i][j]) != 1:
                    raise InvalidHeight(f"horizontal step at ({i},{j}) is not +-1")

    def __eq__(self, other):
        if not isinstance(other, HeightFunction):
            return NotImplemented
        return self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    def __le__(self, other):
        self._same_size(other)
        return all(
            a <= b for ra, rb in zip(self.grid, other.grid) for a, b in zip(ra, rb)
        )

    def _same_size(self, other):
        if self.n != other.n:
            raise SizeMismatch("height functions of different sizes")

    def __repr__(self):
        return f"HeightFunction({self.n})"

    def to_json(self):
        return {"n": self.n, "height": [list(row) for row in self.grid]}

    @staticmethod
    def from_json(data):
        return HeightFunction(data["height"])


def to_height(config: SixVertexConfig) -> HeightFunction:
    config.require_dwbc()
    n = config.n_rows
    horizontal, vertical = config.edge_grids()
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(1, n + 1):
        # walking east over the vertical edge north of vertex (0, j-1)
        grid[0][j] = grid[0][j - 1] + (1 if vertical[0][j - 1] else -1)
    for i in range(1, n + 1):
        # walking south over the horizontal edge west of vertex (i-1, 0)
        grid[i][0] = grid[i - 1][0] + (1 if horizontal[i - 1][0] else -1)
        for j in range(1, n + 1):
            grid[i][j] = grid[i - 1][j] + (1 if horizontal[i - 1][j] else -1)
    return HeightFunction(grid)


def from_height(height: HeightFunction) -> SixVertexConfig:
    n, grid = height.n, height.grid
    vertices = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            w = 1 if grid[i][j - 1] - grid[i - 1][j - 1] == 1 else 0
            e = 1 if grid[i][j] - grid[i - 1][j] == 1 else 0
            north = 1 if grid[i - 1][j] - grid[i - 1][j - 1] == 1 else 0
            s = 1 if grid[i][j] - grid[i][j - 1] == 1 else 0
            vtype = TYPE_FROM_EDGES.get((w, s, e, north))
            if vtype is None:
                raise InvalidHeight(f"no vertex state fits faces around ({i},{j})")
            row.append(vtype)
        vertices.append(row)
    return SixVertexConfig(vertices)


def height_meet(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    h1._same_size(h2)
    return HeightFunction(
        [
            [min(a, b) for a, b in zip(row1, row2)]
            for row1, row2 in zip(h1.grid, h2.grid)
        ]
    )


def height_join(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    h1._same_size(h2)
    return HeightFunction(
        [
            [max(a, b) for a, b in zip(row1, row2)]
            for row1, row2 in zip(h1.grid, h2.grid)
        ]
    )
