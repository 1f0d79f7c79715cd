"""Componentwise verification of the Yang-Baxter equation.

Each crossing of two parameter-carrying lines is the 4x4 vertex weight
matrix R(u, v); states are edge bits as in config.py (first slot horizontal,
second vertical).  The equation compares the two ways of sliding a line
through a crossing: with lines 1, 2, 3 carrying parameters x, y, z,

    R12(x,y) R13(x,z) R23(y,z)  =  R23(y,z) R13(x,z) R12(x,y)

as 8x8 matrices, i.e. 64 scalar identities indexed by the external edge
bits (three in, three out).  Assignments that violate arrow conservation
give 0 = 0 and are reported as (trivially) true.
"""

from __future__ import annotations

from fractions import Fraction

from .config import VERTEX_EDGES, VertexType


def r_matrix(q, u, v):
    """Vertex weights keyed by (in1, in2, out1, out2) edge bits."""
    q_inv = q.inverse() if hasattr(q, "inverse") else Fraction(1) / Fraction(q)
    a = q * u - q_inv * v
    b = u - v
    c1 = (q - q_inv) * v
    c2 = (q - q_inv) * u
    table = {
        VertexType.A1: a,
        VertexType.A2: a,
        VertexType.B1: b,
        VertexType.B2: b,
        VertexType.C1: c1,
        VertexType.C2: c2,
    }
    out = {}
    for vtype, (w, s, e, n) in VERTEX_EDGES.items():
        out[(w, s, e, n)] = table[vtype]
    return out


def _apply(r, state_in, state_out, slot_a, slot_b):
    key = (state_in[slot_a], state_in[slot_b], state_out[slot_a], state_out[slot_b])
    return r.get(key)


def check_ybe(q, x, y, z):
    """Return {(in_bits, out_bits): bool} over all 64 external assignments."""
    r_xy = r_matrix(q, x, y)
    r_xz = r_matrix(q, x, z)
    r_yz = r_matrix(q, y, z)

    bits = (0, 1)
    triples = [(a, b, c) for a in bits for b in bits for c in bits]

    def side(first, second, third, state_in, state_out):
        total = 0
        for u1 in bits:
            for u2 in bits:
                w1 = first[0].get((state_in[first[1]], state_in[first[2]], u1, u2))
                if not w1:
                    continue
                mid = list(state_in)
                mid[first[1]], mid[first[2]] = u1, u2
                for v1 in bits:
                    for v2 in bits:
                        w2 = second[0].get(
                            (mid[second[1]], mid[second[2]], v1, v2)
                        )
                        if not w2:
                            continue
                        mid2 = list(mid)
                        mid2[second[1]], mid2[second[2]] = v1, v2
                        w3 = third[0].get(
                            (
                                mid2[third[1]],
                                mid2[third[2]],
                                state_out[third[1]],
                                state_out[third[2]],
                            )
                        )
                        if not w3:
                            continue
                        rest = [k for k in range(3) if k not in (third[1], third[2])]
                        if any(mid2[k] != state_out[k] for k in rest):
                            continue
                        total = w1 * w2 * w3 + total
        return total

    report = {}
    lhs_order = ((r_xy, 0, 1), (r_xz, 0, 2), (r_yz, 1, 2))
    rhs_order = ((r_yz, 1, 2), (r_xz, 0, 2), (r_xy, 0, 1))
    for state_in in triples:
        for state_out in triples:
            lhs = side(*lhs_order, state_in, state_out)
            rhs = side(*rhs_order, state_in, state_out)
            report[(state_in, state_out)] = lhs == rhs
    return report


def ybe_holds(q, x, y, z) -> bool:
    return all(check_ybe(q, x, y, z).values())
