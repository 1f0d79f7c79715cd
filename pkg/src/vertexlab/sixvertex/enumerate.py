"""Exhaustive enumeration of six-vertex configurations.

The enumerator walks the grid row by row.  Within a row the west arrow and
the incoming vertical arrows determine each vertex up to the A-vs-C choice
available when the west and north bits agree; the DFS tries the A branch
first, which fixes a deterministic output order.
"""

from __future__ import annotations

from collections import Counter

from ..caps import check_grid_size
from .config import TYPE_FROM_EDGES, SixVertexConfig, VertexType


def enumerate_grid(n_rows, n_cols, west, east, north, south):
    """Yield every configuration matching the external edge bit vectors."""
    west, east = tuple(west), tuple(east)
    north, south = tuple(north), tuple(south)

    def row_fillings(row_index, top_bits):
        """All (types, bottom_bits) for one row given its incoming edges."""
        results = []
        types = [None] * n_cols
        bottom = [None] * n_cols

        def walk(col, w_bit):
            if col == n_cols:
                if w_bit == east[row_index]:
                    results.append((tuple(types), tuple(bottom)))
                return
            n_bit = top_bits[col]
            # A/B branch: pass the arrows straight through.
            types[col] = TYPE_FROM_EDGES[(w_bit, n_bit, w_bit, n_bit)]
            bottom[col] = n_bit
            walk(col + 1, w_bit)
            if w_bit == n_bit:
                # C branch: flip both outgoing arrows.
                flipped = 1 - w_bit
                types[col] = TYPE_FROM_EDGES[(w_bit, flipped, flipped, n_bit)]
                bottom[col] = flipped
                walk(col + 1, flipped)

        walk(0, west[row_index])
        return results

    rows_acc = []

    def descend(row_index, top_bits):
        if row_index == n_rows:
            if top_bits == south:
                yield SixVertexConfig(rows_acc, check=False)
            return
        for types, bottom in row_fillings(row_index, top_bits):
            rows_acc.append(types)
            yield from descend(row_index + 1, bottom)
            rows_acc.pop()

    yield from descend(0, north)


def dwbc_boundary(n: int):
    """External edge bits for domain wall boundary conditions."""
    return (1,) * n, (0,) * n, (1,) * n, (0,) * n


def enumerate_dwbc(n: int):
    """Yield every DWBC configuration of size n in a deterministic order."""
    check_grid_size(n)
    west, east, north, south = dwbc_boundary(n)
    yield from enumerate_grid(n, n, west, east, north, south)


def count_dwbc(n: int) -> int:
    return sum(1 for _ in enumerate_dwbc(n))


def vertex_counts(config: SixVertexConfig) -> dict:
    """Number of vertices of each type, keyed by VertexType."""
    counts = Counter(t for row in config.vertices for t in row)
    return {t: counts.get(t, 0) for t in VertexType}
