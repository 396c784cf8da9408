"""Periodic lozenge tilings: construction, heights, flips, and the cut bijection.

A tiling assigns one of the letters U, V, W to every coset of L0/L1; the
letter at x names the lozenge whose interior diagonal is the removed arrow
x -> x+u (U), x-v -> x (V) or x+u -> x-v (W).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .cuttypes import CutType, _as_triple, is_valid_type
from .errors import (
    BadExponentSum,
    InvalidCut,
    InvalidTiling,
    InvalidType,
    NotFlippable,
    NotInLattice,
)
from .lattice import (
    PeriodicityMatrix,
    Point,
    QuotientIndex,
    in_lattice,
    kernel_lattice,
    quotient_index,
    reduce,
)

U, V, W = "U", "V", "W"
LETTERS = (U, V, W)

DIR_U: Point = (1, 0)
DIR_V: Point = (0, 1)
DIR_W: Point = (-1, -1)
DIRECTIONS: dict[str, Point] = {"u": DIR_U, "v": DIR_V, "w": DIR_W}


@dataclass(frozen=True)
class Tiling:
    """Letter assignment on the canonical coset representatives."""

    quotient: QuotientIndex
    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.letters) != len(self.quotient.reps):
            raise ValueError(
                f"expected {len(self.quotient.reps)} letters, got {len(self.letters)}"
            )
        if any(letter not in LETTERS for letter in self.letters):
            raise ValueError("letters must be 'U', 'V' or 'W'")

    @property
    def matrix(self) -> PeriodicityMatrix:
        return self.quotient.matrix

    @property
    def n(self) -> int:
        return self.quotient.matrix.n

    def letter_at(self, p: Point) -> str:
        """Return the letter at the coset of an arbitrary lattice point."""
        return self.letters[self.quotient.index_of(p)]


@dataclass(frozen=True)
class Cut:
    """Removed-arrow set; an arrow is (source coset index, direction letter)."""

    quotient: QuotientIndex
    removed: frozenset[tuple[int, str]]


@dataclass(frozen=True)
class HeightFunction:
    """Heights of the canonical representatives, pinned to 0 at the origin.

    Values extend to all of L0 through the lattice part, which depends only
    on the tiling's type.
    """

    tiling: Tiling
    gamma: CutType
    base: tuple[int, ...]


def validate(tiling: Tiling) -> bool:
    """Check compatibility: one of T(x)=W, T(x+u)=V, T(x-v)=U at every coset."""
    q = tiling.quotient
    for i, (x1, x2) in enumerate(q.reps):
        hits = (
            (tiling.letters[i] == W)
            + (tiling.letter_at((x1 + 1, x2)) == V)
            + (tiling.letter_at((x1, x2 - 1)) == U)
        )
        if hits != 1:
            return False
    return True


def type_of(tiling: Tiling) -> CutType:
    """Count the letters of a valid tiling."""
    if not validate(tiling):
        raise InvalidTiling("letter assignment violates compatibility")
    counts = Counter(tiling.letters)
    return CutType(counts[U], counts[V], counts[W], tiling.n)


def canonical_tiling(matrix: PeriodicityMatrix, gamma) -> Tiling:
    """Build the level-set tiling of a valid type.

    xi(x) = (g1*x1 + g2*x2) mod n descends to the quotient; the letter is V on
    [0, g2), W on [g2, g2+g3) and U on [g2+g3, n). Letter counts come out as
    exactly (g1, g2, g3), including for boundary types.
    """
    g1, g2, g3 = _as_triple(gamma)
    if not is_valid_type(matrix, (g1, g2, g3)):
        raise InvalidType(f"({g1},{g2},{g3}) is not a valid type for this matrix")
    n = matrix.n
    q = quotient_index(matrix)
    letters = []
    for x1, x2 in q.reps:
        xi = (g1 * x1 + g2 * x2) % n
        if xi < g2:
            letters.append(V)
        elif xi < g2 + g3:
            letters.append(W)
        else:
            letters.append(U)
    return Tiling(q, tuple(letters))


def air_tiling(n: int, exponents) -> Tiling:
    """Build the wrap-around tiling of a cyclic quotient from an exponent triple.

    The periodicity lattice is the kernel of x -> e1*x1 + e2*x2 mod n, and the
    letter at x compares the standard representatives phi at x, x+u and x-v.
    With d = gcd(e1, e2, n) the quotient has order n/d and the letter counts
    are (e1/d, e2/d, e3/d).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    e1, e2, e3 = exponents
    if min(e1, e2, e3) < 0 or e1 + e2 + e3 != n:
        raise BadExponentSum(f"({e1},{e2},{e3}) must be non-negative with sum {n}")
    matrix = kernel_lattice([(e1, e2, n)])
    q = quotient_index(matrix)
    if n in (e1, e2, e3):
        # All comparisons degenerate to equalities; the tiling is constant.
        letter = U if e1 == n else V if e2 == n else W
        return Tiling(q, (letter,) * matrix.n)
    letters = []
    for x1, x2 in q.reps:
        a = (e1 * x1 + e2 * x2) % n  # phi(x)
        b = (a + e1) % n  # phi(x + u)
        c = (a + e1 + e3) % n  # phi(x - v), since e1 + e2 + e3 = n
        if c > a:
            letters.append(V)
        elif b > c:
            letters.append(W)
        else:
            # Exactly one descent occurs around the 3-cycle of phi-values.
            assert a > b
            letters.append(U)
    return Tiling(q, tuple(letters))


def _linear_height(gamma: CutType, y: Point) -> int:
    """Lattice part of the height: y1 + y2 - 3*(g1*y1 + g2*y2)/n for y in L1."""
    num = gamma.g1 * y[0] + gamma.g2 * y[1]
    assert num % gamma.n == 0
    return y[0] + y[1] - 3 * (num // gamma.n)


def _step_increment(tiling: Tiling, p: Point, direction: str) -> int:
    """Height change when crossing from p to its `direction` neighbour: +1, or -2 across a removed arrow."""
    x1, x2 = p
    if direction == "u":
        removed = tiling.letter_at(p) == U
    elif direction == "v":
        removed = tiling.letter_at((x1, x2 + 1)) == V
    else:
        removed = tiling.letter_at((x1 - 1, x2)) == W
    return -2 if removed else 1


def height_function(tiling: Tiling) -> HeightFunction:
    """Propagate heights from h(0) = 0 over a spanning tree of the quotient."""
    gamma = type_of(tiling)
    q = tiling.quotient
    base: list[int | None] = [None] * len(q.reps)
    base[q.lookup[(0, 0)]] = 0
    todo: deque[Point] = deque([(0, 0)])
    while todo:
        p = todo.popleft()
        hp = base[q.lookup[p]]
        for direction, vec in DIRECTIONS.items():
            target = (p[0] + vec[0], p[1] + vec[1])
            rep = reduce(target, q.matrix)
            j = q.lookup[rep]
            if base[j] is None:
                shift = (target[0] - rep[0], target[1] - rep[1])
                base[j] = hp + _step_increment(tiling, p, direction) - _linear_height(
                    gamma, shift
                )
                todo.append(rep)
    assert all(value is not None for value in base)
    return HeightFunction(tiling, gamma, tuple(base))


def height_at(height: HeightFunction, p: Point) -> int:
    """Evaluate the height at an arbitrary lattice point."""
    q = height.tiling.quotient
    rep = reduce(p, q.matrix)
    shift = (p[0] - rep[0], p[1] - rep[1])
    return height.base[q.lookup[rep]] + _linear_height(height.gamma, shift)


def lattice_height(gamma, y: Point, matrix: PeriodicityMatrix) -> int:
    """Closed-form height on lattice points; depends only on the type."""
    g1, g2, g3 = _as_triple(gamma)
    if not is_valid_type(matrix, (g1, g2, g3)):
        raise InvalidType(f"({g1},{g2},{g3}) is not a valid type for this matrix")
    if not in_lattice(y, matrix):
        raise NotInLattice(f"{y} is not in the periodicity lattice")
    return _linear_height(CutType(g1, g2, g3, matrix.n), y)


def sources_and_sinks(tiling: Tiling) -> tuple[frozenset[int], frozenset[int]]:
    """Find the flippable cosets: three pairwise-distinct lozenges meeting at a point.

    x is a source when all arrows into x are removed (U at x-u, V at x, W at
    x+v) and a sink when all arrows out of x are removed (U at x, V at x+v,
    W at x-u).
    """
    if not validate(tiling):
        raise InvalidTiling("letter assignment violates compatibility")
    sources = set()
    sinks = set()
    for i, (x1, x2) in enumerate(tiling.quotient.reps):
        here = tiling.letters[i]
        before = tiling.letter_at((x1 - 1, x2))  # x - u
        after = tiling.letter_at((x1, x2 + 1))  # x + v
        if here == V and before == U and after == W:
            sources.add(i)
        elif here == U and before == W and after == V:
            sinks.add(i)
    return frozenset(sources), frozenset(sinks)


def _flipped_letters(
    tiling: Tiling, x: int, sources: frozenset[int], sinks: frozenset[int]
) -> tuple[str, ...]:
    q = tiling.quotient
    x1, x2 = q.reps[x]
    i_before = q.index_of((x1 - 1, x2))
    i_after = q.index_of((x1, x2 + 1))
    letters = list(tiling.letters)
    if x in sources:
        letters[i_before], letters[x], letters[i_after] = W, U, V
    elif x in sinks:
        letters[i_before], letters[x], letters[i_after] = U, V, W
    else:
        raise NotFlippable(f"coset {x} is neither a source nor a sink")
    return tuple(letters)


def flip(tiling: Tiling, x: int) -> Tiling:
    """Exchange the three lozenges meeting at coset x for the opposite configuration."""
    if not 0 <= x < len(tiling.quotient.reps):
        raise NotFlippable(f"coset index {x} out of range")
    sources, sinks = sources_and_sinks(tiling)
    return Tiling(tiling.quotient, _flipped_letters(tiling, x, sources, sinks))


def to_cut(tiling: Tiling) -> Cut:
    """Collect the removed arrow encoded by each letter."""
    if not validate(tiling):
        raise InvalidTiling("letter assignment violates compatibility")
    q = tiling.quotient
    removed = set()
    for i, (x1, x2) in enumerate(q.reps):
        letter = tiling.letters[i]
        if letter == U:
            removed.add((i, "u"))
        elif letter == V:
            removed.add((q.index_of((x1, x2 - 1)), "v"))  # arrow (x-v) -> x
        else:
            removed.add((q.index_of((x1 + 1, x2)), "w"))  # arrow (x+u) -> (x-v)
    return Cut(q, frozenset(removed))


def from_cut(cut: Cut) -> Tiling:
    """Recover the tiling from a removed-arrow set, checking exactly-one-per-triangle."""
    q = cut.quotient
    n = len(q.reps)
    if len(cut.removed) != n:
        raise InvalidCut(f"expected {n} removed arrows, got {len(cut.removed)}")
    letters: list[str | None] = [None] * n
    for i, direction in cut.removed:
        if not isinstance(i, int) or not 0 <= i < n or direction not in DIRECTIONS:
            raise InvalidCut(f"bad arrow ({i!r}, {direction!r})")
        x1, x2 = q.reps[i]
        if direction == "u":
            j, letter = i, U
        elif direction == "v":
            j, letter = q.index_of((x1, x2 + 1)), V
        else:
            j, letter = q.index_of((x1 - 1, x2)), W
        if letters[j] is not None:
            raise InvalidCut(f"triangle at coset {j} loses more than one arrow")
        letters[j] = letter
    tiling = Tiling(q, tuple(letters))  # n arrows into n distinct slots: all set
    if not validate(tiling):
        raise InvalidCut("arrow set does not yield a compatible tiling")
    return tiling


def is_higher_preprojective(cut: Cut) -> bool:
    """Test whether the cut is valid and removes arrows of all three directions."""
    try:
        tiling = from_cut(cut)
    except InvalidCut:
        return False
    return type_of(tiling).positive


def is_acyclic(cut: Cut) -> bool:
    """Detect whether the quiver minus the cut has no directed cycle."""
    from_cut(cut)  # reject malformed arrow sets
    q = cut.quotient
    n = len(q.reps)
    succ: list[list[int]] = [[] for _ in range(n)]
    for i, (x1, x2) in enumerate(q.reps):
        for direction, vec in DIRECTIONS.items():
            if (i, direction) not in cut.removed:
                succ[i].append(q.index_of((x1 + vec[0], x2 + vec[1])))
    color = [0] * n  # 0 unseen, 1 on the DFS stack, 2 finished
    for start in range(n):
        if color[start]:
            continue
        color[start] = 1
        stack = [(start, iter(succ[start]))]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == 1:
                    return False
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                stack.pop()
    return True
