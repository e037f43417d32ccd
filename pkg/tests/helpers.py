"""Shared fixtures: the regression pairs and seeded random generators."""

from fractions import Fraction

from ringroots import (
    Matrix,
    MatrixRing,
    Polynomial,
    PrimeField,
    PrimeFieldElement,
    Quaternion,
    QuaternionRing,
    RationalField,
    ScalarRing,
)

QQ = RationalField()
F2 = PrimeField(2)
F3 = PrimeField(3)
F7 = PrimeField(7)

RAT = ScalarRing(QQ)
M2Q = MatrixRing(2, QQ)
M3Q = MatrixRing(3, QQ)
M2F2 = MatrixRing(2, F2)
HH = QuaternionRing()

QI = Quaternion(0, 1)
QJ = Quaternion(0, 0, 1)
QK = Quaternion(0, 0, 0, 1)


def nilpotent_shift_pair():
    """Two strictly upper-triangular 2x2 matrices with a singular
    difference; both square to zero, so x^2 annihilates them."""
    return M2Q.element([[0, 1], [0, 0]]), M2Q.element([[0, 2], [0, 0]])


def involution_pair():
    """The identity and the swap matrix: nonsingular, equal squares,
    singular difference."""
    return M2Q.element([[1, 0], [0, 1]]), M2Q.element([[0, 1], [1, 0]])


def rank_gap_pair():
    """A pair with no quadratic annihilator (stacked rank exceeds the
    difference rank) that still admits a cubic one."""
    return M2Q.element([[0, 0], [1, -1]]), M2Q.element([[0, 0], [0, 1]])


def rank_gap_cubic_coefficient():
    """A published alternative a1 for the rank-gap pair's cubic."""
    return M2Q.element([[1, 0], [-1, -1]])


def zero_column_pair():
    """3x3 pair whose first power differences have a zero first column
    while the cube difference does not: no cubic annihilator."""
    x1 = M3Q.element([[1, -1, 0], [-1, 1, 0], [1, 0, 0]])
    x2 = M3Q.element([[1, 1, 2], [-1, 1, 0], [1, 0, 0]])
    return x1, x2


def rand_fraction(rng, span=6, max_den=4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_quaternion(rng, span=6, max_den=4) -> Quaternion:
    return Quaternion(*(rand_fraction(rng, span, max_den) for _ in range(4)))


def rand_fp(rng, field: PrimeField) -> PrimeFieldElement:
    return PrimeFieldElement(rng.randrange(field.p), field.p)


def rand_matrix(rng, field, nrows, ncols=None, span=4) -> Matrix:
    ncols = nrows if ncols is None else ncols
    if isinstance(field, PrimeField):
        rows = [[rng.randrange(field.p) for _ in range(ncols)] for _ in range(nrows)]
    else:
        rows = [[rand_fraction(rng, span, 2) for _ in range(ncols)] for _ in range(nrows)]
    return Matrix.from_rows(field, rows)


def rand_element(rng, ring):
    if ring == HH:
        return rand_quaternion(rng)
    if isinstance(ring, MatrixRing):
        return rand_matrix(rng, ring.field, ring.k)
    if isinstance(ring, ScalarRing):
        if isinstance(ring.field, PrimeField):
            return rand_fp(rng, ring.field)
        return rand_fraction(rng)
    raise AssertionError(f"no generator for {ring!r}")


def rand_polynomial(rng, ring, max_degree=3, nonzero=True) -> Polynomial:
    degree = rng.randint(0, max_degree)
    coeffs = [rand_element(rng, ring) for _ in range(degree + 1)]
    p = Polynomial(ring, coeffs)
    while nonzero and p.is_zero():
        p = Polynomial(ring, [rand_element(rng, ring) for _ in range(degree + 1)])
    return p
