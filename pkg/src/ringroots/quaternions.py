"""Rational quaternions a + b*i + c*j + d*k.

The defining relations i^2 = j^2 = -1 and ij = -ji = k drive the product.
Over the rationals the norm a^2+b^2+c^2+d^2 vanishes only at zero, so
every nonzero element is invertible (a genuine division ring).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def _part(value) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"cannot interpret {value!r} as a rational component")
    if isinstance(value, (Fraction, int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    raise ParseError(f"cannot interpret {value!r} as a rational component")


class Quaternion:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _part(a)
        self.b = _part(b)
        self.c = _part(c)
        self.d = _part(d)

    def _coerce(self, other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Quaternion(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return Quaternion(1)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        return self.a**2 + self.b**2 + self.c**2 + self.d**2

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 has no quaternion inverse")
        conj = self.conjugate()
        return Quaternion(conj.a / n, conj.b / n, conj.c / n, conj.d / n)

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other):
        return isinstance(other, Quaternion) and (
            (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def to_json(self):
        return [str(self.a), str(self.b), str(self.c), str(self.d)]

    @classmethod
    def from_json(cls, obj) -> "Quaternion":
        if not isinstance(obj, list) or len(obj) != 4:
            raise ParseError(f"a quaternion encodes as [a, b, c, d], got {obj!r}")
        return cls(*obj)

    def __repr__(self):
        return f"Quaternion({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        terms = []
        for value, unit in ((self.a, ""), (self.b, "i"), (self.c, "j"), (self.d, "k")):
            if value:
                terms.append(f"{value}{unit}")
        return " + ".join(terms) if terms else "0"


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)
