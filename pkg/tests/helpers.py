"""Independent cross-checking oracles, kept deliberately naive and separate."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from lozenge import Cut, Tiling, quotient_index
from lozenge.lattice import PeriodicityMatrix
from lozenge.tiling import LETTERS

STEP = {"u": (1, 0), "v": (0, 1), "w": (-1, -1)}


def fraction_in_lattice(p, columns) -> bool:
    """Solve c1*s + c2*t = p over the rationals and test integrality."""
    (a1, a2), (b1, b2) = columns
    det = a1 * b2 - a2 * b1
    s = Fraction(p[0] * b2 - p[1] * b1, det)
    t = Fraction(a1 * p[1] - a2 * p[0], det)
    return s.denominator == 1 and t.denominator == 1


def same_lattice(cols_a, cols_b) -> bool:
    """Mutual containment of the spans of two column pairs."""
    return all(fraction_in_lattice(c, cols_b) for c in cols_a) and all(
        fraction_in_lattice(c, cols_a) for c in cols_b
    )


_BRUTE: dict[PeriodicityMatrix, frozenset[tuple[str, ...]]] = {}


def brute_force_letters(matrix: PeriodicityMatrix) -> frozenset[tuple[str, ...]]:
    """All assignments whose removed arrows hit every triangle exactly once.

    Checks both triangle families of the quotient quiver directly on arrow
    sets, with no reuse of the library's compatibility test.
    """
    if matrix in _BRUTE:
        return _BRUTE[matrix]
    q = quotient_index(matrix)
    n = len(q.reps)
    idx = q.index_of
    up = []  # arrows among x, x+u, x-v
    down = []  # arrows among x-v, x+u-v, x+u
    arrow_of = []  # removed arrow encoded by each letter at the cell
    for i, (x1, x2) in enumerate(q.reps):
        i_u = idx((x1 + 1, x2))
        i_mv = idx((x1, x2 - 1))
        i_umv = idx((x1 + 1, x2 - 1))
        up.append(((i, "u"), (i_u, "w"), (i_mv, "v")))
        down.append(((i_mv, "u"), (i_umv, "v"), (i_u, "w")))
        arrow_of.append({"U": (i, "u"), "V": (i_mv, "v"), "W": (i_u, "w")})
    found = set()
    for letters in product(LETTERS, repeat=n):
        removed = {arrow_of[i][letters[i]] for i in range(n)}
        if len(removed) != n:
            continue
        if all(sum(a in removed for a in tri) == 1 for tri in up) and all(
            sum(a in removed for a in tri) == 1 for tri in down
        ):
            found.add(letters)
    _BRUTE[matrix] = frozenset(found)
    return _BRUTE[matrix]


def _increment(tiling: Tiling, p, direction: str) -> int:
    """+1 across a surviving arrow leaving p, -2 across a removed one."""
    if direction == "u":
        removed = tiling.letter_at(p) == "U"
    elif direction == "v":
        removed = tiling.letter_at((p[0], p[1] + 1)) == "V"
    else:
        removed = tiling.letter_at((p[0] - 1, p[1])) == "W"
    return -2 if removed else 1


def walk_height(tiling: Tiling, steps) -> tuple[tuple[int, int], int]:
    """Accumulate increments along a walk from the origin; backward steps negate."""
    p = (0, 0)
    h = 0
    for direction, sign in steps:
        d = STEP[direction]
        if sign > 0:
            h += _increment(tiling, p, direction)
            p = (p[0] + d[0], p[1] + d[1])
        else:
            p = (p[0] - d[0], p[1] - d[1])
            h -= _increment(tiling, p, direction)
    return p, h


def path_to(y, order: str = "uv"):
    """Unit steps from the origin to y, one axis at a time."""
    du = [("u", 1 if y[0] > 0 else -1)] * abs(y[0])
    dv = [("v", 1 if y[1] > 0 else -1)] * abs(y[1])
    return du + dv if order == "uv" else dv + du


def random_path_to(rng, y):
    """A shuffled unit-step path to y with a few cancelling w-detours."""
    steps = path_to(y)
    rng.shuffle(steps)
    for _ in range(rng.randrange(3)):
        pos = rng.randrange(len(steps) + 1)
        steps[pos:pos] = [("w", 1), ("w", -1)]
    return steps


def _head(q, arrow) -> int:
    i, d = arrow
    p1, p2 = q.reps[i]
    s1, s2 = STEP[d]
    return q.index_of((p1 + s1, p2 + s2))


def mutate_cut(cut: Cut, x: int, at_source: bool) -> Cut:
    """Swap the removed arrows at a flip vertex: in-arrows for out-arrows or back."""
    q = cut.quotient
    x1, x2 = q.reps[x]
    if at_source:
        keep = {a for a in cut.removed if _head(q, a) != x}
        added = {(x, "u"), (x, "v"), (x, "w")}
    else:
        keep = {a for a in cut.removed if a[0] != x}
        added = {
            (q.index_of((x1 - 1, x2)), "u"),
            (q.index_of((x1, x2 - 1)), "v"),
            (q.index_of((x1 + 1, x2 + 1)), "w"),
        }
    return Cut(q, frozenset(keep | added))
