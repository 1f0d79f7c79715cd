"""Fully packed loops and their boundary link patterns.

Recolor every edge by the checkerboard class of the lattice point its arrow
points at: points (row, col) with row + col even are red, odd are blue (so
the top-left vertex (1,1) is red).  Every vertex then touches exactly two
red and two blue edges, boundary edges alternate red/blue around the
square, and the red paths match the 2n red boundary edges into a
noncrossing pairing.

Edge naming: ("h", r, k) joins lattice points (r, k) and (r, k+1); ("v", k,
c) joins (k, c) and (k+1, c).  Points with both coordinates in 1..n are
vertices, the rest are virtual boundary points.

Boundary numbering (fixed for JSON stability): walk the external slots
clockwise starting at the north edge of column 1 -- north row west to east,
east side top to bottom, south row east to west, west side bottom to top --
and number the red slots 0 .. 2n-1 in walk order.
"""

from __future__ import annotations

from collections import Counter

from ..caps import check_grid_size
from ..errors import InvalidConfig
from ..sixvertex.config import SixVertexConfig
from ..sixvertex.enumerate import enumerate_dwbc


def _endpoints(key):
    kind, a, b = key
    if kind == "h":
        return (a, b), (a, b + 1)
    return (a, b), (a + 1, b)


def _is_vertex(point, n: int) -> bool:
    return 1 <= point[0] <= n and 1 <= point[1] <= n


def edge_color(key, bit) -> str:
    """Red/blue of an edge with arrow bit (1 = east for 'h', up for 'v')."""
    tail, head = _endpoints(key)
    if key[0] == "h":
        point = head if bit else tail
    else:
        point = tail if bit else head  # up points at the smaller row index
    return "red" if (point[0] + point[1]) % 2 == 0 else "blue"


def fpl_coloring(config: SixVertexConfig) -> dict:
    """Map every edge key to 'red' or 'blue'."""
    config.require_dwbc()
    n = config.n_rows
    horizontal, vertical = config.edge_grids()
    colors = {}
    for r in range(1, n + 1):
        for k in range(n + 1):
            colors[("h", r, k)] = edge_color(("h", r, k), horizontal[r - 1][k])
    for k in range(n + 1):
        for c in range(1, n + 1):
            colors[("v", k, c)] = edge_color(("v", k, c), vertical[k][c - 1])
    return colors


def _vertex_edges(point):
    i, j = point
    return (("h", i, j - 1), ("h", i, j), ("v", i - 1, j), ("v", i, j))


def check_two_colors_per_vertex(config: SixVertexConfig) -> bool:
    n = config.n_rows
    colors = fpl_coloring(config)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            around = Counter(colors[key] for key in _vertex_edges((i, j)))
            if around["red"] != 2 or around["blue"] != 2:
                return False
    return True


def boundary_slots(n: int):
    """External edge keys in the fixed clockwise walk order."""
    slots = []
    slots.extend(("v", 0, j) for j in range(1, n + 1))
    slots.extend(("h", i, n) for i in range(1, n + 1))
    slots.extend(("v", n, j) for j in range(n, 0, -1))
    slots.extend(("h", i, 0) for i in range(n, 0, -1))
    return slots


def red_boundary_slots(n: int):
    """The 2n red external slots, in the numbering order."""
    dwbc_bit = {"v0": 1, "vn": 0, "h0": 1, "hn": 0}
    reds = []
    for key in boundary_slots(n):
        kind, a, b = key
        bit = dwbc_bit[f"{kind}{'0' if (a if kind == 'v' else b) == 0 else 'n'}"]
        if edge_color(key, bit) == "red":
            reds.append(key)
    return reds


def _other_red_edge(colors, vertex, incoming):
    reds = [key for key in _vertex_edges(vertex) if colors[key] == "red"]
    reds.remove(incoming)
    if len(reds) != 1:
        raise InvalidConfig("vertex does not touch exactly two red edges")
    return reds[0]


def link_pattern(config: SixVertexConfig):
    """Pairing of the red boundary endpoints induced by the red paths."""
    n = config.n_rows
    colors = fpl_coloring(config)
    reds = red_boundary_slots(n)
    index = {key: pos for pos, key in enumerate(reds)}
    seen = set()
    pairs = []
    for start in reds:
        if start in seen:
            continue
        p1, p2 = _endpoints(start)
        vertex = p1 if _is_vertex(p1, n) else p2
        key = start
        while True:
            key = _other_red_edge(colors, vertex, key)
            q1, q2 = _endpoints(key)
            nxt = q2 if q1 == vertex else q1
            if not _is_vertex(nxt, n):
                break
            vertex = nxt
        seen.add(start)
        seen.add(key)
        pairs.append(tuple(sorted((index[start], index[key]))))
    return tuple(sorted(pairs))


def is_noncrossing(pairs) -> bool:
    for a, b in pairs:
        for c, d in pairs:
            if a < c < b < d:
                return False
    return True


def rotate_pattern(pairs, n: int):
    size = 2 * n
    return tuple(
        sorted(tuple(sorted(((a + 1) % size, (b + 1) % size))) for a, b in pairs)
    )


def refined_link_counts(n: int) -> dict:
    """Count DWBC configurations by their boundary link pattern."""
    check_grid_size(n)
    counts = Counter(link_pattern(c) for c in enumerate_dwbc(n))
    return dict(counts)


def rotation_invariant(n: int) -> bool:
    counts = refined_link_counts(n)
    rotated = {rotate_pattern(p, n): c for p, c in counts.items()}
    return rotated == counts


def pattern_to_json(pairs):
    return [list(pair) for pair in pairs]
