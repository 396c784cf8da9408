"""Letter-count triples (cut types) attached to a periodicity matrix."""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from .errors import InvalidType
from .lattice import PeriodicityMatrix


@dataclass(frozen=True, order=True)
class CutType:
    """Counts of U-, V- and W-lozenges per fundamental domain; g1+g2+g3 = n."""

    g1: int
    g2: int
    g3: int
    n: int

    def __post_init__(self) -> None:
        if min(self.g1, self.g2, self.g3) < 0 or self.n < 1:
            raise InvalidType(f"negative entries in {self.triple()}")
        if self.g1 + self.g2 + self.g3 != self.n:
            raise InvalidType(f"{self.triple()} does not sum to n = {self.n}")

    @property
    def positive(self) -> bool:
        return self.g1 > 0 and self.g2 > 0 and self.g3 > 0

    def triple(self) -> tuple[int, int, int]:
        return (self.g1, self.g2, self.g3)

    def __iter__(self):
        return iter(self.triple())

    def __str__(self) -> str:
        return f"{self.g1},{self.g2},{self.g3}"


def _as_triple(gamma) -> tuple[int, int, int]:
    if isinstance(gamma, CutType):
        return gamma.triple()
    g1, g2, g3 = gamma
    return (g1, g2, g3)


def is_valid_type(matrix: PeriodicityMatrix, gamma) -> bool:
    """Test the divisibility condition (g1, g2) * B == 0 mod n with sum n."""
    g1, g2, g3 = _as_triple(gamma)
    n = matrix.n
    if min(g1, g2, g3) < 0 or g1 + g2 + g3 != n:
        return False
    return (g1 * matrix.a1 + g2 * matrix.a2) % n == 0 and (
        g1 * matrix.b1 + g2 * matrix.b2
    ) % n == 0


def valid_types(
    matrix: PeriodicityMatrix, include_boundary: bool = False
) -> tuple[CutType, ...]:
    """Enumerate all valid triples for the matrix in lexicographic order."""
    n = matrix.n
    found = []
    for g1 in range(n + 1):
        # a2 = 0 in canonical form, so the first divisibility check fixes g1 alone.
        if (g1 * matrix.a1) % n != 0:
            continue
        for g2 in range(n + 1 - g1):
            if is_valid_type(matrix, (g1, g2, n - g1 - g2)):
                t = CutType(g1, g2, n - g1 - g2, n)
                if include_boundary or t.positive:
                    found.append(t)
    return tuple(found)


def simplex_projection(gamma) -> tuple[float, float]:
    """Project a triple to the plane via g2*u - g1*v, u = (1,0), v = -(1/2, sqrt(3)/2)."""
    g1, g2, _ = _as_triple(gamma)
    return (g2 + g1 / 2, g1 * sqrt(3) / 2)
