"""The five-vertex path model behind Schur polynomials.

Configurations live on an n x p grid with n paths entering from the west
and leaving through the north boundary at the columns encoding a shape;
weights are those of FiveVertex in sixvertex.weights (z per straight-east
step on row i counted from the bottom).  The partition function equals
prod_{i<=j} (1 + alpha z_i z_j) * s_shape, and at alpha = 0 configurations
biject with semistandard tableaux.

The extended variant starts the paths on the south side of n extra columns;
its partition function is the h-determinant below and carries the full
prod_{i,j} prefactor.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidConfig, TruncationTooSmall, WidthTooSmall
from ..exactmath.matrices import det_exact
from ..exactmath.series import TruncatedSeries
from ..sixvertex.config import TYPE_FROM_EDGES, SixVertexConfig, VertexType
from ..sixvertex.weights import (
    BoundarySpec,
    FiveVertex,
    exit_columns,
    partition_function_brute,
)
from .partitions import normalize, padded
from .ssyt import SSYT


class PathConfigFiveVertex:
    """A path configuration, stored as the underlying vertex grid plus the
    bottom-up crossing sets: levels[y] lists the columns where paths cross
    from row y to row y+1 (levels[0] is the south boundary)."""

    __slots__ = ("n", "p", "config", "levels")

    def __init__(self, config: SixVertexConfig):
        n, p = config.n_rows, config.n_cols
        _, vertical = config.edge_grids()
        levels = tuple(
            tuple(c + 1 for c in range(p) if vertical[n - y][c] == 1)
            for y in range(n + 1)
        )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "config", config)
        object.__setattr__(self, "levels", levels)

    def __setattr__(self, name, value):
        raise AttributeError("PathConfigFiveVertex is immutable")

    def __eq__(self, other):
        if not isinstance(other, PathConfigFiveVertex):
            return NotImplemented
        return self.config == other.config

    def __hash__(self):
        return hash(self.config)

    @staticmethod
    def from_levels(levels, p: int) -> "PathConfigFiveVertex":
        """Rebuild the vertex grid from bottom-up crossing sets."""
        levels = [set(level) for level in levels]
        n = len(levels) - 1
        rows_top_down = []
        for y in range(n, 0, -1):
            below, above = levels[y - 1], levels[y]
            row = []
            w = 1
            for c in range(1, p + 1):
                s_bit = 1 if c in below else 0
                n_bit = 1 if c in above else 0
                e_bit = w + s_bit - n_bit
                vtype = TYPE_FROM_EDGES.get((w, s_bit, e_bit, n_bit))
                if vtype is None:
                    raise InvalidConfig(f"invalid crossing sets at row {y}")
                row.append(vtype)
                w = e_bit
            if w != 0:
                raise InvalidConfig(f"row {y} does not close at the east side")
            rows_top_down.append(row)
        return PathConfigFiveVertex(SixVertexConfig(rows_top_down))


def enumerate_five_vertex(shape, n: int, p: int, allow_b1: bool = False):
    """Every path configuration with the given north boundary.

    With allow_b1 False, straight-north vertices are excluded (the actual
    five-vertex model); with True the full six-vertex state space is used.
    """
    boundary = BoundarySpec.partial_dwbc(shape, n, p)
    for config in boundary.enumerate():
        if not allow_b1 and any(
            VertexType.B1 in row for row in config.vertices
        ):
            continue
        yield PathConfigFiveVertex(config)


def five_vertex_Z(shape, n: int, p: int, zs, alpha):
    """Brute-force weighted sum over the n x p path configurations."""
    shape = normalize(shape)
    if len(zs) != n:
        raise WidthTooSmall("need one z per path row")
    boundary = BoundarySpec.partial_dwbc(shape, n, p)
    return partition_function_brute(FiveVertex(zs, alpha), boundary)


def five_vertex_prefactor(zs, alpha):
    """prod_{i <= j} (1 + alpha z_i z_j)."""
    zs = list(zs)
    value = 1
    for i in range(len(zs)):
        for j in range(i, len(zs)):
            value = value * (1 + alpha * zs[i] * zs[j])
    return value


def extended_prefactor(zs, alpha):
    """prod over all ordered pairs (i, j) of (1 + alpha z_i z_j)."""
    zs = list(zs)
    value = 1
    for zi in zs:
        for zj in zs:
            value = value * (1 + alpha * zi * zj)
    return value


def extended_Z_direct(shape, n: int, p: int, zs, alpha):
    """Direct sum over the extended n x (n+p) grid, paths starting south."""
    shape = normalize(shape)
    exits = set(n + c for c in exit_columns(shape, n))
    width = n + p
    north = tuple(1 if c in exits else 0 for c in range(1, width + 1))
    south = tuple(1 if c <= n else 0 for c in range(1, width + 1))
    boundary = BoundarySpec(n, width, (0,) * n, (0,) * n, north, south)
    return partition_function_brute(FiveVertex(zs, alpha), boundary)


def h_alpha_series(zs, alpha, max_degree: int) -> TruncatedSeries:
    """Single-path row sums, shifted: coefficient k+n of the returned series
    is the weight of one path displaced k+n columns while climbing the n
    rows.  Closed form: prod_i (u + alpha z_i) / (1 - u z_i)."""
    zs = list(zs)
    numerator = TruncatedSeries.constant(Fraction(1), 1, max_degree)
    denominator = TruncatedSeries.constant(Fraction(1), 1, max_degree)
    for z in zs:
        numerator = numerator * TruncatedSeries(
            1, max_degree, {(1,): Fraction(1), (0,): alpha * z}
        )
        denominator = denominator * TruncatedSeries(
            1, max_degree, {(0,): Fraction(1), (1,): -z}
        )
    return numerator * denominator.invert()


def single_path_weight(zs, alpha, displacement: int):
    """Oracle: enumerate one path entering from the south and climbing
    len(zs) rows while moving ``displacement`` columns east."""
    n = len(zs)
    width = displacement + 1
    if displacement < 0:
        return 0
    north = tuple(1 if c == width else 0 for c in range(1, width + 1))
    south = tuple(1 if c == 1 else 0 for c in range(1, width + 1))
    boundary = BoundarySpec(n, width, (0,) * n, (0,) * n, north, south)
    return partition_function_brute(FiveVertex(zs, alpha), boundary)


def lgv_determinant(shape, zs, alpha, max_degree=None):
    """det of single-path weights h_{lambda_j - j + i}; equals the extended
    partition function prod_{i,j} (1 + alpha z_i z_j) * s_shape."""
    zs = list(zs)
    n = len(zs)
    shape = normalize(shape)
    if len(shape) > n:
        return 0
    lam = padded(shape, n)
    first = lam[0] if lam else 0
    needed = first + 2 * n - 1 if n else 0
    if max_degree is None:
        max_degree = needed
    if max_degree < needed:
        raise TruncationTooSmall(f"need series degree {needed}, got {max_degree}")
    series = h_alpha_series(zs, alpha, max_degree)

    def shifted(k: int):
        if k + n < 0:
            return Fraction(0)
        return series.coefficient((k + n,))

    matrix = [
        [shifted(lam[j] - (j + 1) + (i + 1)) for j in range(n)]
        for i in range(n)
    ]
    return det_exact(matrix)


def path_to_ssyt(path: PathConfigFiveVertex) -> SSYT:
    """Record, per path, the bottom-up rows of its straight-east vertices.

    Only valid at alpha = 0 (no straight-north vertices); the tableau
    monomial then reproduces the configuration weight.
    """
    config = path.config
    n, p = path.n, path.p
    if any(VertexType.B1 in row for row in config.vertices):
        raise InvalidConfig("straight-north step: not a five-vertex state")
    rows = []
    for i in range(1, n + 1):
        r, c = n - i, 0  # matrix coordinates, entering row y=i from the west
        heading_east = True
        entries = []
        while True:
            vtype = config.vertices[r][c]
            if heading_east:
                if vtype == VertexType.B2:
                    entries.append(n - r)
                    c += 1
                elif vtype in (VertexType.C1, VertexType.A1):
                    heading_east = False
                    r -= 1
                else:
                    raise InvalidConfig(f"eastward path broken at ({r},{c})")
            else:
                if vtype in (VertexType.C2, VertexType.A1):
                    heading_east = True
                    c += 1
                else:
                    raise InvalidConfig(f"northward path broken at ({r},{c})")
            if heading_east and c == p:
                raise InvalidConfig("path escaped through the east side")
            if not heading_east and r < 0:
                break
        if entries and any(a > b for a, b in zip(entries, entries[1:])):
            raise InvalidConfig("recorded rows are not weakly increasing")
        rows.append(tuple(entries))
    rows = [row for row in rows if row]
    return SSYT(tuple(rows))


def ssyt_to_path(tableau: SSYT, n: int, p: int) -> PathConfigFiveVertex:
    """Inverse of path_to_ssyt for tableaux with entries in 1..n."""
    counts = []
    for i in range(1, n + 1):
        row = tableau.rows[i - 1] if i - 1 < len(tableau.rows) else ()
        counts.append([sum(1 for x in row if x == y) for y in range(n + 1)])
    levels = [set() for _ in range(n + 1)]
    for i in range(1, n + 1):
        m = counts[i - 1]
        column = 0
        for y in range(i, n + 1):
            column = column + m[y] + 1 if y > i else 1 + m[y]
            levels[y].add(column)
    for y in range(n + 1):
        if len(levels[y]) != y:
            raise InvalidConfig("tableau rows collide; not a valid filling")
    return PathConfigFiveVertex.from_levels(levels, p)
