"""Brute-force ground truth: exhaustive enumeration and theorem cross-checks."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .cuttypes import valid_types
from .errors import BoundExceeded
from .grouprep import admits_cut_group_form, admits_cut_matrix_form, parse_group
from .lattice import PeriodicityMatrix, quotient_index
from .mutation import flip_class, flip_connect
from .tiling import LETTERS, Tiling, U, V, W, canonical_tiling, type_of, validate

DEFAULT_MAX_N = 16


@dataclass(frozen=True)
class Report:
    """Outcome of a theorem check: overall flag plus human-readable lines."""

    ok: bool
    lines: tuple[str, ...]

    def __str__(self) -> str:
        return "\n".join(self.lines)


def _bound(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("LOZENGE_MAX_N", DEFAULT_MAX_N))


def all_canonical_matrices(max_n: int) -> tuple[PeriodicityMatrix, ...]:
    """Every canonical matrix with index at most max_n, ordered by (n, a1, b1)."""
    out = []
    for n in range(1, max_n + 1):
        for a1 in range(1, n + 1):
            if n % a1 != 0:
                continue
            for b1 in range(a1):
                out.append(PeriodicityMatrix(a1, b1, 0, n // a1))
    return tuple(out)


def enumerate_all_tilings(
    matrix: PeriodicityMatrix, max_n: int | None = None
) -> tuple[Tiling, ...]:
    """Backtrack over all letter assignments satisfying compatibility.

    Cosets are assigned in canonical order with branch order U, V, W, so the
    output is sorted lexicographically by letter string.
    """
    n = matrix.n
    limit = _bound(max_n)
    if n > limit:
        raise BoundExceeded(f"n = {n} exceeds enumeration bound {limit}")
    q = quotient_index(matrix)
    # One constraint per coset x: exactly one of (x, W), (x+u, V), (x-v, U).
    touching: list[list[tuple[int, str]]] = [[] for _ in range(n)]
    for cid, (x1, x2) in enumerate(q.reps):
        touching[cid].append((cid, W))
        touching[q.index_of((x1 + 1, x2))].append((cid, V))
        touching[q.index_of((x1, x2 - 1))].append((cid, U))
    satisfied = [0] * n
    assigned = [0] * n
    letters: list[str] = [""] * n
    out: list[Tiling] = []

    def backtrack(i: int) -> None:
        if i == n:
            out.append(Tiling(q, tuple(letters)))
            return
        for letter in LETTERS:
            letters[i] = letter
            feasible = True
            for cid, wanted in touching[i]:
                assigned[cid] += 1
                if wanted == letter:
                    satisfied[cid] += 1
                if satisfied[cid] > 1 or (assigned[cid] == 3 and satisfied[cid] == 0):
                    feasible = False
            if feasible:
                backtrack(i + 1)
            for cid, wanted in touching[i]:
                assigned[cid] -= 1
                if wanted == letter:
                    satisfied[cid] -= 1

    backtrack(0)
    return tuple(out)


def _augment(
    y: int,
    sat_u: list[int],
    sat_v: list[int],
    match_constraint: list[int],
    visited: set[int],
) -> bool:
    """Kuhn augmenting step: find a new constraint for cell y."""
    for cid in (sat_u[y], sat_v[y], y):
        if cid in visited:
            continue
        visited.add(cid)
        owner = match_constraint[cid]
        if owner == -2:  # locked by a pre-placed cell
            continue
        if owner == -1 or _augment(owner, sat_u, sat_v, match_constraint, visited):
            match_constraint[cid] = y
            return True
    return False


def exists_three_letter_tiling(matrix: PeriodicityMatrix) -> bool:
    """Decide in polynomial time whether some tiling uses all three letters.

    The tiling set is translation-invariant, so any witness can be moved to
    put a U at coset 0; every placement of one V and one W is then completed
    by bipartite matching between cells and compatibility constraints,
    starting from the all-W identity matching and augmenting the few cells
    the placement displaces. No theorem about types is consulted.
    """
    n = matrix.n
    if n < 3:
        return False
    q = quotient_index(matrix)
    sat_u = [q.index_of((x1, x2 + 1)) for x1, x2 in q.reps]  # cell as U
    sat_v = [q.index_of((x1 - 1, x2)) for x1, x2 in q.reps]  # cell as V
    for b in range(1, n):
        for c in range(1, n):
            if c == b:
                continue
            locks = (sat_u[0], sat_v[b], c)
            if len(set(locks)) != 3:
                continue
            match_constraint = list(range(n))  # all-W seed: constraint y <- cell y
            fixed = (0, b, c)
            for cell in fixed:
                match_constraint[cell] = -1
            displaced = []
            for k in locks:
                if match_constraint[k] >= 0 and match_constraint[k] not in fixed:
                    displaced.append(match_constraint[k])
                match_constraint[k] = -2
            if all(
                _augment(y, sat_u, sat_v, match_constraint, set()) for y in displaced
            ):
                letters = [""] * n
                letters[0], letters[b], letters[c] = U, V, W
                for cid in range(n):
                    y = match_constraint[cid]
                    if y < 0:
                        continue
                    letters[y] = U if cid == sat_u[y] else V if cid == sat_v[y] else W
                tiling = Tiling(q, tuple(letters))
                assert validate(tiling) and set(letters) == {U, V, W}
                return True
    return False


def verify_type_theorem(
    matrix: PeriodicityMatrix, max_n: int | None = None
) -> Report:
    """Compare the enumerated type census with the divisibility prediction."""
    label = f"matrix {matrix.a1} {matrix.b1} / {matrix.a2} {matrix.b2} (n={matrix.n})"
    census = sorted({type_of(t).triple() for t in enumerate_all_tilings(matrix, max_n)})
    predicted = sorted(t.triple() for t in valid_types(matrix, include_boundary=True))
    lines = [f"type census for {label}: {len(census)} types"]
    ok = census == predicted
    if ok:
        lines.append("type theorem: PASS")
    else:
        missing = [t for t in predicted if t not in census]
        extra = [t for t in census if t not in predicted]
        lines.append(f"type theorem: FAIL missing={missing} unexpected={extra}")
    return Report(ok, tuple(lines))


def verify_mutation_theorem(
    matrix: PeriodicityMatrix, max_n: int | None = None
) -> Report:
    """Check that flip classes coincide with positive-type classes."""
    label = f"matrix {matrix.a1} {matrix.b1} / {matrix.a2} {matrix.b2} (n={matrix.n})"
    tilings = enumerate_all_tilings(matrix, max_n)
    groups: dict[tuple[int, int, int], list[Tiling]] = {}
    for t in tilings:
        gamma = type_of(t)
        if gamma.positive:
            groups.setdefault(gamma.triple(), []).append(t)
    ok = True
    lines = [f"mutation theorem for {label}: {len(groups)} positive types"]
    for triple, members in sorted(groups.items()):
        reached = flip_class(canonical_tiling(matrix, triple))
        if {t.letters for t in reached} != {t.letters for t in members}:
            ok = False
            lines.append(
                f"type {triple}: FAIL flip class {len(reached)} != census {len(members)}"
            )
            continue
        bad_pairs = 0
        for t1 in members:
            for t2 in members:
                seq = flip_connect(t1, t2)
                if seq.replay().letters != t2.letters:
                    bad_pairs += 1
        if bad_pairs:
            ok = False
            lines.append(f"type {triple}: FAIL {bad_pairs} unconnected pairs")
        else:
            lines.append(
                f"type {triple}: PASS class size {len(members)}, all pairs connected"
            )
    return Report(ok, tuple(lines))


def _derived_group_spec(matrix: PeriodicityMatrix) -> str:
    """Two-generator presentation of the group whose kernel lattice is `matrix`.

    The rows of the inverse matrix give the dual-group generators; their
    exponent triples are completed to determinant one mod n.
    """
    n = matrix.n
    e11 = matrix.b2 % n
    e12 = (-matrix.b1) % n
    e13 = (-e11 - e12) % n
    e21 = 0
    e22 = matrix.a1 % n
    e23 = (-e22) % n
    return f"1/{n}({e11},{e12},{e13}); 1/{n}({e21},{e22},{e23})"


def verify_classification(max_order: int) -> Report:
    """Cross-check the three cut-existence routes on every group up to max_order.

    Sweeps every canonical matrix (each one is the periodicity matrix of the
    group derived from its inverse, recovered exactly by kernel_lattice) plus
    every single-generator exponent triple, and requires the group-form and
    matrix-form predicates and the matching oracle to agree everywhere.
    """
    ok = True
    lines = []
    admitted = 0
    matrices = all_canonical_matrices(max_order)
    for matrix in matrices:
        group = parse_group(_derived_group_spec(matrix))
        assert group.matrix == matrix and group.order == matrix.n
        by_group = admits_cut_group_form(group)
        by_matrix = admits_cut_matrix_form(matrix)
        by_oracle = exists_three_letter_tiling(matrix)
        if not by_group == by_matrix == by_oracle:
            ok = False
            lines.append(
                f"FAIL {matrix.rows()}: group={by_group} "
                f"matrix={by_matrix} oracle={by_oracle}"
            )
        admitted += by_matrix
    lines.append(
        f"matrix sweep: {len(matrices)} matrices with n <= {max_order}, "
        f"{admitted} admit a cut"
    )
    cyclic_checked = 0
    for m in range(1, max_order + 1):
        for e1 in range(m):
            for e2 in range(m):
                group = parse_group(f"1/{m}({e1},{e2},{(-e1 - e2) % m})")
                cyclic_checked += 1
                if admits_cut_group_form(group) != admits_cut_matrix_form(group.matrix):
                    ok = False
                    lines.append(f"FAIL cyclic 1/{m}({e1},{e2},...): forms disagree")
    lines.append(f"single-generator sweep: {cyclic_checked} presentations checked")
    lines.append(f"classification: {'PASS' if ok else 'FAIL'}")
    return Report(ok, tuple(lines))
