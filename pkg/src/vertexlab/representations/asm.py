"""Alternating sign matrices as second differences of height functions."""

from __future__ import annotations

from ..errors import InvalidASM
from ..sixvertex.config import SixVertexConfig
from ..sixvertex.ldet import asm_entries_of_config, validate_asm
from .heights import HeightFunction, from_height, to_height


class AsmMatrix:
    __slots__ = ("n", "entries")

    def __init__(self, entries):
        entries = validate_asm(entries)
        object.__setattr__(self, "n", len(entries))
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("AsmMatrix is immutable")

    def __eq__(self, other):
        if not isinstance(other, AsmMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"AsmMatrix({self.n})"

    def to_json(self):
        return {"n": self.n, "asm": [list(row) for row in self.entries]}

    @staticmethod
    def from_json(data):
        return AsmMatrix(data["asm"])


def to_asm(height: HeightFunction) -> AsmMatrix:
    """Entry (i,j) is half the discrete mixed second difference of h."""
    n, grid = height.n, height.grid
    entries = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            twice = grid[i][j - 1] + grid[i - 1][j] - grid[i][j] - grid[i - 1][j - 1]
            if twice % 2:
                raise InvalidASM("odd mixed difference")
            row.append(twice // 2)
        entries.append(row)
    return AsmMatrix(entries)


def from_asm(asm: AsmMatrix) -> HeightFunction:
    n = asm.n
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    # Invert the second difference: h[i][j] = i + j - 2 * sum of the
    # upper-left i x j block of the matrix.
    partial = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            partial[i][j] = (
                asm.entries[i - 1][j - 1]
                + partial[i - 1][j]
                + partial[i][j - 1]
                - partial[i - 1][j - 1]
            )
    for i in range(n + 1):
        for j in range(n + 1):
            grid[i][j] = i + j - 2 * partial[i][j]
    return HeightFunction(grid)


def config_to_asm(config: SixVertexConfig) -> AsmMatrix:
    return AsmMatrix(asm_entries_of_config(config))


def asm_to_config(asm: AsmMatrix) -> SixVertexConfig:
    return from_height(from_asm(asm))


def config_asm_roundtrip_ok(config: SixVertexConfig) -> bool:
    height = to_height(config)
    asm = to_asm(height)
    return (
        from_asm(asm) == height
        and from_height(height) == config
        and config_to_asm(config) == asm
    )
