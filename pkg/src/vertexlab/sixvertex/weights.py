"""Boundary specifications, Boltzmann weight systems, brute partition sums."""

from __future__ import annotations

from ..errors import InvalidInput, SizeMismatch, WidthTooSmall
from .config import SixVertexConfig, VertexType
from .enumerate import dwbc_boundary, enumerate_grid


def exit_columns(shape, n: int):
    """1-indexed north exit columns for n paths with top boundary ``shape``.

    Path i (counted from the right) exits at column n + 1 - i + shape_i.
    """
    parts = tuple(shape) + (0,) * (n - len(shape))
    return sorted(n + 1 - i + parts[i - 1] for i in range(1, n + 1))


class BoundarySpec:
    """External edge bits for a rectangular grid."""

    def __init__(self, n_rows, n_cols, west, east, north, south):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.west = tuple(west)
        self.east = tuple(east)
        self.north = tuple(north)
        self.south = tuple(south)
        if len(self.west) != n_rows or len(self.east) != n_rows:
            raise InvalidInput("west/east boundary length mismatch")
        if len(self.north) != n_cols or len(self.south) != n_cols:
            raise InvalidInput("north/south boundary length mismatch")

    @staticmethod
    def dwbc(n: int) -> "BoundarySpec":
        west, east, north, south = dwbc_boundary(n)
        return BoundarySpec(n, n, west, east, north, south)

    @staticmethod
    def partial_dwbc(shape, n: int, p: int) -> "BoundarySpec":
        """n paths entering west, exiting north at the columns given by shape."""
        parts = tuple(x for x in shape if x)
        if len(parts) > n:
            raise WidthTooSmall(f"shape has more than {n} parts")
        first = parts[0] if parts else 0
        if p < n + first:
            raise WidthTooSmall(f"width {p} below n + shape_1 = {n + first}")
        exits = set(exit_columns(parts, n))
        north = tuple(1 if c in exits else 0 for c in range(1, p + 1))
        return BoundarySpec(n, p, (1,) * n, (0,) * n, north, (0,) * p)

    def enumerate(self):
        yield from enumerate_grid(
            self.n_rows, self.n_cols, self.west, self.east, self.north, self.south
        )


class SixSymbolic:
    """Row/column inhomogeneous weights a = q*x - y/q, b = x - y,
    c1 = (q - 1/q)*y, c2 = (q - 1/q)*x with x = xs[row], y = ys[col]."""

    def __init__(self, q, xs, ys):
        self.q = q
        self.xs = tuple(xs)
        self.ys = tuple(ys)
        self.q_inv = 1 / q if not hasattr(q, "inverse") else q.inverse()
        self.c_factor = q - self.q_inv

    def shape_check(self, n_rows, n_cols):
        if len(self.xs) != n_rows or len(self.ys) != n_cols:
            raise SizeMismatch("weight parameters do not match the grid")

    def weight_at(self, row, col, vtype):
        x, y = self.xs[row], self.ys[col]
        if vtype in (VertexType.A1, VertexType.A2):
            return self.q * x - self.q_inv * y
        if vtype in (VertexType.B1, VertexType.B2):
            return x - y
        if vtype == VertexType.C1:
            return self.c_factor * y
        return self.c_factor * x


class SixExplicit:
    """One explicit weight per vertex type, constant or per-site grids."""

    def __init__(self, a1, a2, b1, b2, c1, c2):
        self.table = {
            VertexType.A1: a1,
            VertexType.A2: a2,
            VertexType.B1: b1,
            VertexType.B2: b2,
            VertexType.C1: c1,
            VertexType.C2: c2,
        }

    def shape_check(self, n_rows, n_cols):
        pass

    def weight_at(self, row, col, vtype):
        value = self.table[vtype]
        if isinstance(value, (list, tuple)):
            return value[row][col]
        return value


class FiveVertex:
    """Per-row weights a=1, b1=alpha*z, b2=z, c1=1+alpha*z^2, c2=1.

    Rows are numbered bottom-up for the z assignment: the bottom grid row
    carries zs[0].  At alpha = 0 the straight-north vertex b1 is forbidden
    and the model degenerates to five vertices.
    """

    def __init__(self, zs, alpha):
        self.zs = tuple(zs)
        self.alpha = alpha

    def shape_check(self, n_rows, n_cols):
        if len(self.zs) != n_rows:
            raise SizeMismatch("need one z per row")

    def weight_at(self, row, col, vtype):
        z = self.zs[len(self.zs) - 1 - row]
        if vtype in (VertexType.A1, VertexType.A2):
            return 1
        if vtype == VertexType.B1:
            return self.alpha * z
        if vtype == VertexType.B2:
            return z
        if vtype == VertexType.C1:
            return 1 + self.alpha * z * z
        return 1


def config_weight(config: SixVertexConfig, weights):
    total = 1
    for r in range(config.n_rows):
        for c in range(config.n_cols):
            total = total * weights.weight_at(r, c, config.vertices[r][c])
    return total


def partition_function_brute(weights, boundary: BoundarySpec):
    """Exact sum of configuration weights over all boundary-matching states."""
    weights.shape_check(boundary.n_rows, boundary.n_cols)
    total = 0
    for config in boundary.enumerate():
        total = config_weight(config, weights) + total
    return total
