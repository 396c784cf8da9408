"""Diagonal abelian subgroups of SL3 and the cut-existence classification."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, lcm

from .errors import DeterminantNotOne, NotFaithful, ParseError
from .lattice import ENTRY_BOUND, MAX_INDEX, PeriodicityMatrix, kernel_lattice


@dataclass(frozen=True)
class DiagonalGenerator:
    """The matrix diag(zeta^e1, zeta^e2, zeta^e3) for a primitive order-th root zeta."""

    order: int
    exponents: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.order < 1 or self.order >= ENTRY_BOUND:
            raise ValueError(f"generator order {self.order} out of range")
        if any(not 0 <= e < self.order for e in self.exponents):
            raise ValueError(f"exponents {self.exponents} not reduced mod {self.order}")
        if sum(self.exponents) % self.order != 0:
            raise DeterminantNotOne(
                f"exponents {self.exponents} do not sum to 0 mod {self.order}"
            )


@dataclass(frozen=True)
class GroupEmbedding:
    """A finite diagonal subgroup of SL3 with its periodicity matrix.

    `elements` is the full subgroup of (Z/modulus)^3 generated by the exponent
    vectors; `order` is its size and always equals matrix.n for valid input.
    """

    generators: tuple[DiagonalGenerator, ...]
    order: int
    matrix: PeriodicityMatrix
    modulus: int
    elements: frozenset[tuple[int, int, int]]


_GEN_RE = re.compile(r"1/(\d+)\((-?\d+),(-?\d+),(-?\d+)\)")


def _closure(
    generators: tuple[DiagonalGenerator, ...],
) -> tuple[int, frozenset[tuple[int, int, int]]]:
    """Close the exponent vectors to a subgroup of (Z/N)^3, N = lcm of orders."""
    n_lcm = lcm(*(g.order for g in generators))
    elems: set[tuple[int, int, int]] = {(0, 0, 0)}
    for g in generators:
        v = tuple(e * (n_lcm // g.order) % n_lcm for e in g.exponents)
        k = n_lcm // gcd(n_lcm, *v)
        grown: set[tuple[int, int, int]] = set()
        for x in elems:
            cur = x
            for _ in range(k):
                grown.add(cur)
                cur = (
                    (cur[0] + v[0]) % n_lcm,
                    (cur[1] + v[1]) % n_lcm,
                    (cur[2] + v[2]) % n_lcm,
                )
        elems = grown
        if len(elems) > MAX_INDEX:
            raise ValueError(f"group order exceeds bound {MAX_INDEX}")
    return n_lcm, frozenset(elems)


def parse_group(text: str) -> GroupEmbedding:
    """Parse a semicolon-separated list of generators "1/n(e1,e2,e3)"."""
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty generator string")
    generators = []
    for token in compact.split(";"):
        m = _GEN_RE.fullmatch(token)
        if m is None:
            raise ParseError(f"bad generator {token!r}, expected 1/n(e1,e2,e3)")
        order = int(m.group(1))
        if order < 1:
            raise ParseError(f"generator order must be positive, got {order}")
        if order >= ENTRY_BOUND:
            raise ValueError(f"generator order {order} out of bounds")
        exponents = tuple(int(s) % order for s in m.groups()[1:])
        generators.append(DiagonalGenerator(order, exponents))
    modulus, elements = _closure(tuple(generators))
    order = len(elements)
    matrix = kernel_lattice(
        [(g.exponents[0], g.exponents[1], g.order) for g in generators]
    )
    if order != matrix.n:
        raise NotFaithful(
            f"characters rho1, rho2 generate index {matrix.n}, group has order {order}"
        )
    return GroupEmbedding(tuple(generators), order, matrix, modulus, elements)


def has_trivial_character(group: GroupEmbedding) -> bool:
    """Test whether one of the three coordinate characters is trivial on the group."""
    return any(
        all(g.exponents[j] == 0 for g in group.generators) for j in range(3)
    )


def is_klein_four(group: GroupEmbedding) -> bool:
    """Test whether the group is C2 x C2, from the closed element set."""
    return group.order == 4 and all(
        all(2 * t % group.modulus == 0 for t in el) for el in group.elements
    )


def admits_cut_group_form(group: GroupEmbedding) -> bool:
    """Classification predicate on the group side.

    A cut exists iff the group is not the Klein four-group and no coordinate
    character is trivial.
    """
    return not is_klein_four(group) and not has_trivial_character(group)


def admits_cut_matrix_form(matrix: PeriodicityMatrix) -> bool:
    """Classification predicate on the matrix side: some all-positive triple works.

    (g1, g2, g3) is a valid letter-count triple iff (g2, -g1) lies in the
    column lattice, so scan lattice points with g1 >= 1, g2 >= 1 and
    g1 + g2 <= n - 1 one column coefficient at a time; O(n) instead of O(n^2).
    """
    n = matrix.n
    a1, b1, b2 = matrix.a1, matrix.b1, matrix.b2
    for c2 in range(-(n // b2), 0):
        g1 = -c2 * b2
        if g1 > n - 2:
            continue
        # g2 = c1*a1 + c2*b1 must land in [1, n - 1 - g1].
        lo = 1 - c2 * b1
        hi = n - 1 - g1 - c2 * b1
        if -((-lo) // a1) <= hi // a1:
            return True
    return False
