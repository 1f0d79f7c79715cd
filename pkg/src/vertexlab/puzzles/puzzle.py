"""Edge-labeled triangular puzzles counting Littlewood-Richardson numbers.

The size-N region is cut into unit triangles: row r (top to bottom,
0-indexed) has r+1 upward triangles U(r,0..r) and r downward ones, D(r,i)
wedged between U(r,i) and U(r,i+1) with its horizontal edge shared with
U(r-1,i).  Edges carry labels 0, 1 or 10 (stored as 2).  Reading any unit
triangle counterclockwise must give 000, 111, or a cyclic rotation of
(0,1,10); listed explicitly per orientation:

    up   (L, R, B):  000, 111, (1,0,10), (0,10,1), (10,1,0)
    down (T, L, R):  000, 111, (10,0,1), (1,10,0), (0,1,10)

Two 10-edges never meet, so each pairs one up with one down triangle into a
lozenge with 1/0 alternating around it.  The table is pinned by the
regression test requiring the box product of two single-box shapes to have
exactly its two known fillings.

Boundary dictionary: on the north-west side (read from the south-west
corner up to the apex) green path slots carry 0 and empty slots 1; on the
north-east side (south-east corner up to the apex) red slots carry 1 and
empty slots 0; on the south side (west to east) green slots carry 0 and red
slots 1.  Green slots sit at the occupancy positions of the first shape,
red at those of the second, and the south side mixes green at the result
shape's positions with red everywhere else.
"""

from __future__ import annotations

from ..errors import DoesNotFitBox
from ..schur.partitions import normalize
from .boundary import occupancy

LABEL_NAMES = {0: "0", 1: "1", 2: "10"}
LABEL_VALUES = {"0": 0, "1": 1, "10": 2}

UP_TYPES = ((0, 0, 0), (1, 1, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0))
DOWN_TYPES = ((0, 0, 0), (1, 1, 1), (2, 0, 1), (1, 2, 0), (0, 1, 2))

# up triangles keyed by their left edge
UP_BY_LEFT = {}
for left, right, bottom in UP_TYPES:
    UP_BY_LEFT.setdefault(left, []).append((right, bottom))

# down triangles determine their right edge from (top, left)
DOWN_RIGHT = {(top, left): right for top, left, right in DOWN_TYPES}


class Puzzle:
    """A complete filling: up[r][i] = (left, right, bottom) labels."""

    __slots__ = ("size", "up")

    def __init__(self, up):
        up = tuple(tuple(tuple(t) for t in row) for row in up)
        object.__setattr__(self, "size", len(up))
        object.__setattr__(self, "up", up)

    def __setattr__(self, name, value):
        raise AttributeError("Puzzle is immutable")

    def __eq__(self, other):
        if not isinstance(other, Puzzle):
            return NotImplemented
        return self.up == other.up

    def __hash__(self):
        return hash(self.up)

    def __repr__(self):
        return f"Puzzle(size={self.size})"

    def down_triangle(self, r: int, i: int):
        """Labels (top, left, right) of D(r, i)."""
        return (
            self.up[r - 1][i][2],
            self.up[r][i][1],
            self.up[r][i + 1][0],
        )

    def boundary_nw(self):
        return tuple(self.up[r][0][0] for r in range(self.size))

    def boundary_ne(self):
        return tuple(self.up[r][r][1] for r in range(self.size))

    def boundary_south(self):
        last = self.size - 1
        return tuple(self.up[last][i][2] for i in range(self.size))

    def to_json(self) -> dict:
        edges = []
        for r, row in enumerate(self.up):
            for i, (left, right, bottom) in enumerate(row):
                edges.append(
                    {"pos": [r, i, "left"], "label": LABEL_NAMES[left]}
                )
                edges.append(
                    {"pos": [r, i, "right"], "label": LABEL_NAMES[right]}
                )
                edges.append(
                    {"pos": [r, i, "bottom"], "label": LABEL_NAMES[bottom]}
                )
        return {"N": self.size, "edges": edges}

    @staticmethod
    def from_json(data: dict) -> "Puzzle":
        size = data["N"]
        rows = [[[None, None, None] for _ in range(r + 1)] for r in range(size)]
        slot = {"left": 0, "right": 1, "bottom": 2}
        for edge in data["edges"]:
            r, i, direction = edge["pos"]
            rows[r][i][slot[direction]] = LABEL_VALUES[edge["label"]]
        return Puzzle(rows)

    def ascii_diagram(self) -> str:
        lines = []
        for r, row in enumerate(self.up):
            pad = " " * (2 * (self.size - r))
            cells = " ".join(
                f"[{LABEL_NAMES[l]},{LABEL_NAMES[rr]},{LABEL_NAMES[b]}]"
                for l, rr, b in row
            )
            lines.append(pad + cells)
        return "\n".join(lines)


def _boundary_labels(lam, mu, nu, total, k):
    for shape in (lam, mu, nu):
        shape = normalize(shape)
        if len(shape) > k or (shape and shape[0] > total - k):
            raise DoesNotFitBox(f"{shape} does not fit a {k} x {total - k} box")
    occ_l, occ_m, occ_n = (occupancy(s, k) for s in (lam, mu, nu))
    # index r is the puzzle row; boundary positions count from the corners
    nw = tuple(0 if (total - r) in occ_l else 1 for r in range(total))
    ne = tuple(1 if (total - r) in occ_m else 0 for r in range(total))
    south = tuple(0 if (i + 1) in occ_n else 1 for i in range(total))
    return nw, ne, south


def enumerate_puzzles(lam, mu, nu, total: int, k: int):
    """Yield all fillings with the three boundary shapes."""
    nw, ne, south = _boundary_labels(lam, mu, nu, total, k)
    rows = []

    def fill_row(r: int, prev_bottoms):
        """DFS over row r given the bottom labels of row r-1."""
        row = []

        def place(i: int):
            if i == r + 1:
                yield tuple(row)
                return
            if i == 0:
                left = nw[r]
            else:
                left = DOWN_RIGHT.get((prev_bottoms[i - 1], row[i - 1][1]))
                if left is None:
                    return
            for right, bottom in UP_BY_LEFT.get(left, ()):
                if i == r and right != ne[r]:
                    continue
                if r == total - 1 and bottom != south[i]:
                    continue
                row.append((left, right, bottom))
                yield from place(i + 1)
                row.pop()

        yield from place(0)

    def descend(r: int, prev_bottoms):
        if r == total:
            yield Puzzle(rows)
            return
        for filled in fill_row(r, prev_bottoms):
            rows.append(filled)
            yield from descend(r + 1, tuple(t[2] for t in filled))
            rows.pop()

    yield from descend(0, ())


def count_puzzles(lam, mu, nu, total: int, k: int) -> int:
    """The Littlewood-Richardson coefficient as a puzzle count."""
    return sum(1 for _ in enumerate_puzzles(lam, mu, nu, total, k))
