"""Immutable exact matrices over a scalar field.

Shapes are checked on every operation; a mismatch raises instead of
broadcasting.  Non-square shapes appear only inside the linear-algebra
routines (stacked and augmented systems).
"""

from __future__ import annotations

from .errors import MismatchError, ParseError


class Matrix:
    __slots__ = ("field", "entries")

    def __init__(self, field, entries):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise MismatchError("a matrix needs at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise MismatchError("ragged rows; all rows must share one length")
            for e in row:
                if not field.contains(e):
                    raise MismatchError(f"entry {e!r} is not an element of {field!r}")
        self.field = field
        self.entries = rows

    @classmethod
    def from_rows(cls, field, rows) -> "Matrix":
        """Build a matrix, coercing each entry through the field."""
        return cls(field, [[field.element(e) for e in row] for row in rows])

    @classmethod
    def identity(cls, field, k: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(k)] for i in range(k)])

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def _check_same_shape(self, other):
        if not isinstance(other, Matrix):
            raise MismatchError(f"expected a matrix, got {other!r}")
        if self.field != other.field:
            raise MismatchError("matrices over different fields do not mix")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise MismatchError(
                f"shape mismatch: {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise MismatchError("matrices over different fields do not mix")
        if self.ncols != other.nrows:
            raise MismatchError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = [other.column(j) for j in range(other.ncols)]
        product = [
            [_dot(row, col) for col in cols]
            for row in self.entries
        ]
        return Matrix(self.field, product)

    def __pow__(self, n: int):
        if not self.is_square():
            raise MismatchError("only square matrices have powers")
        if n < 0:
            raise MismatchError("negative matrix powers are not defined here")
        if n == 0:
            return Matrix.identity(self.field, self.nrows)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.entries)))

    def stack(self, other: "Matrix") -> "Matrix":
        """Rows of `other` appended below the rows of `self`."""
        if self.field != other.field or self.ncols != other.ncols:
            raise MismatchError("stacking needs the same field and column count")
        return Matrix(self.field, self.entries + other.entries)

    def augment(self, other: "Matrix") -> "Matrix":
        """Columns of `other` appended to the right of `self`."""
        if self.field != other.field or self.nrows != other.nrows:
            raise MismatchError("augmenting needs the same field and row count")
        return Matrix(
            self.field, [ra + rb for ra, rb in zip(self.entries, other.entries)]
        )

    def __bool__(self):
        return any(any(e for e in row) for row in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries))

    def to_json(self):
        return [[self.field.scalar_to_json(e) for e in row] for row in self.entries]

    @classmethod
    def from_json(cls, field, obj) -> "Matrix":
        if not isinstance(obj, list) or not all(isinstance(row, list) for row in obj):
            raise ParseError(f"a matrix encodes as an array of row arrays, got {obj!r}")
        try:
            return cls.from_rows(field, obj)
        except MismatchError as exc:
            raise ParseError(str(exc)) from exc

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"Matrix([{rows}] over {self.field!r})"


def _dot(row, col):
    acc = None
    for a, b in zip(row, col):
        term = a * b
        acc = term if acc is None else acc + term
    return acc
