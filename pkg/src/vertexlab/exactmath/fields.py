"""Exact scalars over Q and its two quadratic extensions Q(i) and Q(w).

A scalar is a + b*tau where tau depends on the field tag:

    Q    tau absent (b must be 0)
    Qi   tau = i,  i^2 = -1
    Qw   tau = w,  w^2 = w - 1   (w is the primitive sixth root of unity)

Both extensions keep every value as a pair of rationals, so evaluation at
q = i and q = w stays exact.  In Qw the combination q - 1/q equals 2w - 1
and squares to -3.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero, TagMismatch

Q = "Q"
QI = "Qi"
QW = "Qw"

_TAGS = (Q, QI, QW)


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot build a rational from {value!r}")


class FieldScalar:
    """Immutable exact scalar a + b*tau in the field named by ``tag``."""

    __slots__ = ("tag", "a", "b")

    def __init__(self, tag: str, a, b=0):
        if tag not in _TAGS:
            raise ValueError(f"unknown field tag {tag!r}")
        a = _frac(a)
        b = _frac(b)
        if tag == Q and b != 0:
            raise TagMismatch("rational scalars cannot carry a tau component")
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def of(value, tag: str = Q) -> "FieldScalar":
        """Embed an int, Fraction or FieldScalar into the field ``tag``."""
        if isinstance(value, FieldScalar):
            return value.to(tag)
        return FieldScalar(tag, _frac(value))

    def to(self, tag: str) -> "FieldScalar":
        """Embed into ``tag``; only Q embeds into the extensions."""
        if tag == self.tag:
            return self
        if self.tag == Q:
            return FieldScalar(tag, self.a)
        raise TagMismatch(f"cannot embed {self.tag} scalar into {tag}")

    def _pair(self, other):
        """Coerce ``other`` next to ``self``, widening Q into an extension."""
        if isinstance(other, (int, Fraction)):
            return self, FieldScalar(self.tag, other)
        if not isinstance(other, FieldScalar):
            return NotImplemented
        if other.tag == self.tag:
            return self, other
        if self.tag == Q:
            return self.to(other.tag), other
        if other.tag == Q:
            return self, other.to(self.tag)
        raise TagMismatch(f"cannot mix {self.tag} and {other.tag}")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return FieldScalar(x.tag, x.a + y.a, x.b + y.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar(self.tag, -self.a, -self.b)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return FieldScalar(x.tag, x.a - y.a, x.b - y.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        a, b, c, d = x.a, x.b, y.a, y.b
        if x.tag == QW:
            # (a + bw)(c + dw) with w^2 = w - 1
            return FieldScalar(QW, a * c - b * d, a * d + b * c + b * d)
        if x.tag == QI:
            return FieldScalar(QI, a * c - b * d, a * d + b * c)
        return FieldScalar(Q, a * c)

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        a, b = self.a, self.b
        if self.tag == Q:
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return FieldScalar(Q, Fraction(1) / a)
        if self.tag == QI:
            norm = a * a + b * b
        else:  # Qw: conjugate of a + bw is (a + b) - bw, norm a^2 + ab + b^2
            norm = a * a + a * b + b * b
        if norm == 0:
            raise DivisionByZero("inverse of zero")
        if self.tag == QI:
            return FieldScalar(QI, a / norm, -b / norm)
        return FieldScalar(QW, (a + b) / norm, -b / norm)

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = FieldScalar(self.tag, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison and hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, FieldScalar):
            return NotImplemented
        if self.tag != other.tag:
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.tag, self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return f"FieldScalar({self.tag!r}, {str(self.a)!r})"
        return f"FieldScalar({self.tag!r}, {str(self.a)!r}, {str(self.b)!r})"

    def __str__(self):
        tau = {QI: "i", QW: "w"}.get(self.tag, "tau")
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*{tau}"
        return f"{self.a}+{self.b}*{tau}"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"field": self.tag, "a": str(self.a), "b": str(self.b)}

    @staticmethod
    def from_json(data: dict) -> "FieldScalar":
        return FieldScalar(data["field"], Fraction(data["a"]), Fraction(data["b"]))


def field_arith(x: FieldScalar, y: FieldScalar, op: str) -> FieldScalar:
    """Apply one of add/sub/mul/div to two scalars of the same field."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def omega() -> FieldScalar:
    """The generator w of Qw."""
    return FieldScalar(QW, 0, 1)


def imag_unit() -> FieldScalar:
    """The generator i of Qi."""
    return FieldScalar(QI, 0, 1)


def q_minus_qinv(q: FieldScalar) -> FieldScalar:
    return q - q.inverse()
