"""Ring descriptors: scalar fields, square-matrix rings, rational quaternions.

A descriptor validates payloads, supplies the identities, answers
invertibility queries, and owns the JSON wire format of its elements.
Binary operations on payloads from different descriptors are rejected,
never coerced.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import DomainError, MismatchError, ParseError
from .matrices import Matrix
from .quaternions import Quaternion
from .scalars import (
    PrimeField,
    PrimeFieldElement,
    RationalField,
    field_from_json,
)


class Ring:
    """Shared surface: identities, validation, arithmetic, JSON."""

    kind = ""

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def check(self, x):
        if not self.contains(x):
            raise MismatchError(f"{x!r} is not an element of {self!r}")
        return x

    def element(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def sub(self, a, b):
        return self.check(a) - self.check(b)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def neg(self, a):
        return -self.check(a)

    def pow(self, a, n: int):
        if n < 0:
            raise DomainError("ring powers take nonnegative exponents")
        return self.check(a) ** n

    def invert(self, a):
        """Two-sided inverse of a, or None when a is not a unit."""
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return not self.check(a)

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, obj):
        return self.element(obj)

    def to_json(self) -> dict:
        raise NotImplementedError


class ScalarRing(Ring):
    """A field viewed as a (commutative) ring."""

    kind = "field"

    def __init__(self, field):
        self.field = field

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def contains(self, x) -> bool:
        return self.field.contains(x)

    def element(self, value):
        return self.field.element(value)

    def invert(self, a):
        return self.field.invert(self.check(a))

    def element_to_json(self, a):
        return self.field.scalar_to_json(self.check(a))

    def to_json(self) -> dict:
        return {"kind": "field", "field": self.field.to_json()}

    def __eq__(self, other):
        return isinstance(other, ScalarRing) and self.field == other.field

    def __hash__(self):
        return hash(("field", self.field))

    def __repr__(self):
        return f"ScalarRing({self.field!r})"


class MatrixRing(Ring):
    """Square k x k matrices over a field."""

    kind = "matrix"

    def __init__(self, k: int, field):
        if k < 1:
            raise DomainError("matrix rings need k >= 1")
        self.k = k
        self.field = field

    @property
    def zero(self):
        return Matrix.zeros(self.field, self.k, self.k)

    @property
    def one(self):
        return Matrix.identity(self.field, self.k)

    def contains(self, x) -> bool:
        return (
            isinstance(x, Matrix)
            and x.field == self.field
            and x.nrows == self.k
            and x.ncols == self.k
        )

    def element(self, value):
        if isinstance(value, Matrix):
            return self.check(value)
        if isinstance(value, (list, tuple)):
            return self.check(Matrix.from_json(self.field, [list(r) for r in value]))
        raise ParseError(f"cannot interpret {value!r} as a {self.k}x{self.k} matrix")

    def invert(self, a):
        return linalg.matrix_inverse(self.check(a))

    def element_to_json(self, a):
        return self.check(a).to_json()

    def to_json(self) -> dict:
        return {"kind": "matrix", "k": self.k, "field": self.field.to_json()}

    def __eq__(self, other):
        return (
            isinstance(other, MatrixRing)
            and self.k == other.k
            and self.field == other.field
        )

    def __hash__(self):
        return hash(("matrix", self.k, self.field))

    def __repr__(self):
        return f"MatrixRing({self.k}, {self.field!r})"


class QuaternionRing(Ring):
    """Quaternions with rational components; every nonzero element is a unit."""

    kind = "quaternion"

    @property
    def zero(self):
        return Quaternion()

    @property
    def one(self):
        return Quaternion(1)

    def contains(self, x) -> bool:
        return isinstance(x, Quaternion)

    def element(self, value):
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (list, tuple)):
            return Quaternion.from_json(list(value))
        raise ParseError(f"cannot interpret {value!r} as a quaternion")

    def invert(self, a):
        self.check(a)
        return a.inverse() if a else None

    def element_to_json(self, a):
        return self.check(a).to_json()

    def to_json(self) -> dict:
        return {"kind": "quaternion"}

    def __eq__(self, other):
        return isinstance(other, QuaternionRing)

    def __hash__(self):
        return hash("quaternion")

    def __repr__(self):
        return "QuaternionRing()"


def ring_from_json(obj) -> Ring:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"bad ring descriptor: {obj!r}")
    kind = obj["kind"]
    if kind == "field":
        return ScalarRing(field_from_json(obj.get("field")))
    if kind == "matrix":
        k = obj.get("k")
        if not isinstance(k, int) or k < 1:
            raise ParseError(f"matrix ring descriptor needs an integer 'k' >= 1: {obj!r}")
        return MatrixRing(k, field_from_json(obj.get("field")))
    if kind == "quaternion":
        return QuaternionRing()
    raise ParseError(f"unknown ring kind {kind!r}")


def infer_ring(payload) -> Ring:
    """The ring a payload naturally belongs to."""
    if isinstance(payload, Fraction):
        return ScalarRing(RationalField())
    if isinstance(payload, PrimeFieldElement):
        return ScalarRing(PrimeField(payload.modulus))
    if isinstance(payload, Quaternion):
        return QuaternionRing()
    if isinstance(payload, Matrix):
        if not payload.is_square():
            raise MismatchError("only square matrices are ring elements")
        return MatrixRing(payload.nrows, payload.field)
    raise MismatchError(f"{payload!r} is not an element of any supported ring")
