"""Exact integer arithmetic for the triangular lattice and its cofinite sublattices.

Points live in L0 = Zu + Zv and are stored as (x1, x2) coefficient pairs; the
third hexagonal direction is w = -(u+v), so adding w means (x1-1, x2-1).
A finite-index sublattice L1 is given by the columns of a 2x2 integer matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InfiniteIndex, SingularMatrix

Point = tuple[int, int]

ENTRY_BOUND = 1 << 31
MAX_INDEX = 10**6


@dataclass(frozen=True)
class PeriodicityMatrix:
    """Canonical column basis of a finite-index sublattice of Z^2.

    Columns (a1, a2) and (b1, b2) generate the lattice; the canonical form has
    a2 = 0, a1 > 0, b2 > 0 and 0 <= b1 < a1, so the index is n = a1 * b2.
    """

    a1: int
    b1: int
    a2: int
    b2: int

    def __post_init__(self) -> None:
        if self.a2 != 0 or self.a1 <= 0 or self.b2 <= 0 or not 0 <= self.b1 < self.a1:
            raise ValueError(f"not in canonical form: {self.rows()}")

    @property
    def n(self) -> int:
        return self.a1 * self.b2 - self.a2 * self.b1

    def rows(self) -> list[list[int]]:
        return [[self.a1, self.b1], [self.a2, self.b2]]

    def columns(self) -> tuple[Point, Point]:
        return (self.a1, self.a2), (self.b1, self.b2)


def canonicalize(raw) -> PeriodicityMatrix:
    """Reduce a 2x2 integer matrix (rows [[a1,b1],[a2,b2]]) to canonical form.

    Only column operations of determinant +-1 are used, so the column lattice
    is preserved exactly.
    """
    rows = list(raw)
    if len(rows) != 2 or any(len(list(r)) != 2 for r in rows):
        raise ValueError("expected a 2x2 matrix")
    (a1, b1), (a2, b2) = (list(r) for r in rows)
    for e in (a1, b1, a2, b2):
        if not isinstance(e, int) or isinstance(e, bool):
            raise ValueError(f"matrix entries must be integers, got {e!r}")
        if abs(e) >= ENTRY_BOUND:
            raise ValueError(f"matrix entry {e} out of bounds (|e| < 2^31)")
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise SingularMatrix(f"matrix {rows} has determinant 0")
    if abs(det) > MAX_INDEX:
        raise ValueError(f"lattice index {abs(det)} exceeds bound {MAX_INDEX}")
    c1, c2 = [a1, a2], [b1, b2]
    if det < 0:
        c2 = [-c2[0], -c2[1]]
    # Euclid on the bottom row: |c1[1]| strictly decreases until it hits 0.
    while c1[1] != 0:
        q = c2[1] // c1[1]
        c2 = [c2[0] - q * c1[0], c2[1] - q * c1[1]]
        c1, c2 = c2, [-c1[0], -c1[1]]
    if c1[0] < 0:
        c1 = [-c1[0], -c1[1]]
        c2 = [-c2[0], -c2[1]]
    q = c2[0] // c1[0]
    c2 = [c2[0] - q * c1[0], c2[1]]
    return PeriodicityMatrix(c1[0], c2[0], 0, c2[1])


def in_lattice(p: Point, matrix: PeriodicityMatrix) -> bool:
    """Test whether p is an integer combination of the matrix columns."""
    x1, x2 = p
    n = matrix.n
    # Cramer: B*c = p has integral c iff both adjugate products vanish mod n.
    return (x1 * matrix.b2 - x2 * matrix.b1) % n == 0 and (
        matrix.a1 * x2 - matrix.a2 * x1
    ) % n == 0


class QuotientIndex:
    """Canonical coset representatives of L0 modulo the lattice of `matrix`.

    Representatives are the box {(x1, x2) : 0 <= x1 < a1, 0 <= x2 < b2},
    ordered lexicographically with x1 major; `lookup` inverts `reps`.
    """

    __slots__ = ("matrix", "reps", "lookup")

    def __init__(self, matrix: PeriodicityMatrix) -> None:
        self.matrix = matrix
        self.reps: tuple[Point, ...] = tuple(
            (x1, x2) for x1 in range(matrix.a1) for x2 in range(matrix.b2)
        )
        self.lookup: dict[Point, int] = {p: i for i, p in enumerate(self.reps)}

    @property
    def n(self) -> int:
        return self.matrix.n

    def index_of(self, p: Point) -> int:
        """Return the canonical index of the coset of p."""
        return self.lookup[reduce(p, self.matrix)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuotientIndex) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"QuotientIndex({self.matrix!r})"


@lru_cache(maxsize=None)
def quotient_index(matrix: PeriodicityMatrix) -> QuotientIndex:
    """Build (and cache) the quotient index of a canonical matrix."""
    return QuotientIndex(matrix)


def reduce(p: Point, quotient: QuotientIndex | PeriodicityMatrix) -> Point:
    """Map p to its canonical coset representative."""
    m = quotient.matrix if isinstance(quotient, QuotientIndex) else quotient
    x1, x2 = p
    k2 = x2 // m.b2
    return ((x1 - k2 * m.b1) % m.a1, x2 - k2 * m.b2)


def _solve_congruence(alpha: int, beta: int, m: int) -> tuple[Point, Point]:
    """Basis of {(a, b) in Z^2 : alpha*a + beta*b == 0 mod m} for m >= 1."""
    alpha %= m
    beta %= m
    if alpha == 0 and beta == 0:
        return (1, 0), (0, 1)
    g1 = gcd(alpha, m)
    t0 = g1 // gcd(beta, g1)
    # Solve alpha*y == -beta*t0 mod m; both sides are divisible by g1.
    m1 = m // g1
    if m1 == 1:
        y0 = 0
    else:
        y0 = ((-beta * t0) // g1 * pow(alpha // g1, -1, m1)) % m1
    return (m // g1, 0), (y0, t0)


def kernel_lattice(relations) -> PeriodicityMatrix:
    """Return the canonical matrix of {x : c1*x1 + c2*x2 == 0 mod m for all relations}."""
    # Columns of (m00 m01 / m10 m11) generate the current solution lattice.
    m00, m01, m10, m11 = 1, 0, 0, 1
    for c1, c2, m in relations:
        for e in (c1, c2, m):
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"relation entries must be integers, got {e!r}")
        if m < 0 or abs(c1) >= ENTRY_BOUND or abs(c2) >= ENTRY_BOUND or m >= ENTRY_BOUND:
            raise ValueError(f"relation ({c1}, {c2}, {m}) out of bounds")
        if m == 0:
            if c1 == 0 and c2 == 0:
                continue
            raise InfiniteIndex(f"relation ({c1}, {c2}, 0) forces a rank-deficient kernel")
        # Pull the functional through the current basis and solve on coefficients.
        alpha = (c1 * m00 + c2 * m10) % m
        beta = (c1 * m01 + c2 * m11) % m
        (k00, k10), (k01, k11) = _solve_congruence(alpha, beta, m)
        step = canonicalize(
            [
                [m00 * k00 + m01 * k10, m00 * k01 + m01 * k11],
                [m10 * k00 + m11 * k10, m10 * k01 + m11 * k11],
            ]
        )
        m00, m01, m10, m11 = step.a1, step.b1, step.a2, step.b2
    out = canonicalize([[m00, m01], [m10, m11]])
    for c1, c2, m in relations:
        for col in out.columns():
            assert m == 0 or (c1 * col[0] + c2 * col[1]) % m == 0
    return out
