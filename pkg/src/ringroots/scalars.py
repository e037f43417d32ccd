"""Exact scalar fields: arbitrary-precision rationals and prime fields F_p.

Rationals are plain ``fractions.Fraction`` values (already canonical:
reduced, positive denominator, zero is 0/1).  Prime-field residues get a
small wrapper class so that mixed-modulus arithmetic is rejected instead
of silently recombined.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, MismatchError, ParseError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeFieldElement:
    """A residue mod a prime; arithmetic never leaves the field."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise MismatchError(
                    f"residues mod {self.modulus} and mod {other.modulus} do not mix"
                )
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElement(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElement(self.residue - other.residue, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElement(other.residue - self.residue, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElement(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(pow(self.residue, n, self.modulus), self.modulus)

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return PrimeFieldElement(pow(self.residue, -1, self.modulus), self.modulus)

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        return (
            isinstance(other, PrimeFieldElement)
            and self.modulus == other.modulus
            and self.residue == other.residue
        )

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __repr__(self):
        return f"PrimeFieldElement({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)


class RationalField:
    """Descriptor for the rationals; elements are ``Fraction`` values."""

    kind = "rational"
    finite = False
    zero = Fraction(0)
    one = Fraction(1)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def element(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational literal {value!r}") from exc
        raise ParseError(f"cannot interpret {value!r} as a rational")

    def invert(self, x: Fraction):
        return None if x == 0 else 1 / x

    def scalar_to_json(self, x: Fraction) -> str:
        return str(x)

    def to_json(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """Descriptor for F_p, p prime."""

    kind = "prime"
    finite = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.p = p

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def contains(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.modulus == self.p

    def element(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.p:
                raise MismatchError(
                    f"residue mod {value.modulus} is not an element of F_{self.p}"
                )
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return PrimeFieldElement(value, self.p)
        raise ParseError(f"cannot interpret {value!r} as an element of F_{self.p}")

    def invert(self, x: PrimeFieldElement):
        return None if x.residue == 0 else x.inverse()

    def elements(self):
        """All p field elements, in residue order."""
        return (PrimeFieldElement(r, self.p) for r in range(self.p))

    def scalar_to_json(self, x: PrimeFieldElement) -> int:
        return x.residue

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_from_json(obj) -> RationalField | PrimeField:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"bad field descriptor: {obj!r}")
    kind = obj["kind"]
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        p = obj.get("p")
        if not isinstance(p, int):
            raise ParseError(f"prime field descriptor needs an integer 'p': {obj!r}")
        return PrimeField(p)
    raise ParseError(f"unknown field kind {kind!r}")
