"""Pipe readings of configurations: rook structure, bumpless pipe dreams,
and the Bruhat order oracle used for the sub-poset check.

Switching to the complementary edge set (west horizontal arrows, down
vertical arrows) turns a DWBC configuration into pipes entering on the east
side and leaving on the south side, crossing at A2 vertices.  Reading the
exit column of the pipe entering at each row gives a permutation; on
configurations with no C2 vertex it coincides with the rook permutation.
"""

from __future__ import annotations

from ..errors import InvalidConfig
from ..sixvertex.config import SixVertexConfig, VertexType


class Permutation:
    """One-line notation over 1..n."""

    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidConfig(f"not a permutation word: {word}")
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"Permutation({''.join(map(str, self.word))})"

    def inversions(self) -> int:
        word = self.word
        return sum(
            1
            for i in range(len(word))
            for j in range(i + 1, len(word))
            if word[i] > word[j]
        )

    def rank_matrix(self):
        n = len(self.word)
        return tuple(
            tuple(
                sum(1 for k in range(i) if self.word[k] <= j + 1)
                for j in range(n)
            )
            for i in range(1, n + 1)
        )


def bruhat_leq(p: Permutation, q: Permutation) -> bool:
    """Standard rank-matrix criterion: p <= q iff every rank of p is >=
    the corresponding rank of q."""
    if len(p) != len(q):
        raise InvalidConfig("permutations of different sizes")
    rp, rq = p.rank_matrix(), q.rank_matrix()
    return all(a >= b for ra, rb in zip(rp, rq) for a, b in zip(ra, rb))


def rook_structure(config: SixVertexConfig):
    """The rook permutation if each row has a single turning vertex (a C1)."""
    config.require_dwbc()
    word = []
    for row in config.vertices:
        turns = [
            (c + 1, t)
            for c, t in enumerate(row)
            if t in (VertexType.C1, VertexType.C2)
        ]
        if len(turns) != 1 or turns[0][1] != VertexType.C1:
            return None
        word.append(turns[0][0])
    return Permutation(word)


def to_bpd(config: SixVertexConfig):
    """Trace all pipes east to south; returns one (row, col) list per pipe."""
    config.require_dwbc()
    n = config.n_rows
    pipes = []
    for entry_row in range(1, n + 1):
        i, j = entry_row, n
        heading = "W"
        visited = [(i, j)]
        while True:
            vtype = config.vertices[i - 1][j - 1]
            if heading == "W":
                if vtype in (VertexType.A2, VertexType.B1):
                    j -= 1
                elif vtype == VertexType.C1:
                    heading = "S"
                    i += 1
                else:
                    raise InvalidConfig(f"westward pipe broken at ({i},{j})")
            else:
                if vtype in (VertexType.A2, VertexType.B2):
                    i += 1
                elif vtype == VertexType.C2:
                    heading = "W"
                    j -= 1
                else:
                    raise InvalidConfig(f"southward pipe broken at ({i},{j})")
            if heading == "S" and i == n + 1:
                break
            if heading == "W" and j == 0:
                raise InvalidConfig("pipe escaped through the west side")
            visited.append((i, j))
        pipes.append(visited)
    return pipes


def bpd_permutation(config: SixVertexConfig) -> Permutation:
    """The pipe entering at east row i exits south at column word[i-1]."""
    return Permutation([pipe[-1][1] for pipe in to_bpd(config)])
