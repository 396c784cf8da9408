"""Canonical forms, membership, quotient indexing and kernel lattices."""

from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import fraction_in_lattice, same_lattice
from lozenge import (
    InfiniteIndex,
    PeriodicityMatrix,
    SingularMatrix,
    canonicalize,
    in_lattice,
    kernel_lattice,
    quotient_index,
    reduce,
)


def columns_of(raw):
    return ((raw[0][0], raw[1][0]), (raw[0][1], raw[1][1]))


class TestPeriodicityMatrix:
    def test_accepts_canonical_entries(self):
        m = PeriodicityMatrix(6, 4, 0, 2)
        assert m.n == 12
        assert m.rows() == [[6, 4], [0, 2]]
        assert m.columns() == ((6, 0), (4, 2))

    @pytest.mark.parametrize(
        "entries",
        [
            (6, 4, 1, 2),  # a2 != 0
            (0, 0, 0, 2),  # a1 not positive
            (-3, 0, 0, 1),
            (6, 4, 0, 0),  # b2 not positive
            (6, 4, 0, -2),
            (6, 6, 0, 2),  # b1 not reduced mod a1
            (6, -1, 0, 2),
        ],
    )
    def test_rejects_non_canonical_entries(self, entries):
        with pytest.raises(ValueError):
            PeriodicityMatrix(*entries)


class TestCanonicalize:
    def test_already_canonical(self):
        assert canonicalize([[6, 4], [0, 2]]) == PeriodicityMatrix(6, 4, 0, 2)

    def test_lower_triangular_input(self):
        assert canonicalize([[1, 0], [1, 3]]) == PeriodicityMatrix(3, 1, 0, 1)

    def test_diagonal_input(self):
        assert canonicalize([[2, 0], [0, 2]]) == PeriodicityMatrix(2, 0, 0, 2)

    def test_column_operations_do_not_change_result(self):
        base = [[6, 4], [0, 2]]
        swapped = [[4, 6], [2, 0]]
        negated = [[-6, 4], [0, 2]]
        combined = [[6 + 4, 4], [0 + 2, 2]]
        expected = canonicalize(base)
        assert canonicalize(swapped) == expected
        assert canonicalize(negated) == expected
        assert canonicalize(combined) == expected

    @pytest.mark.parametrize("raw", [[[0, 0], [0, 0]], [[1, 2], [2, 4]], [[3, -3], [1, -1]]])
    def test_singular(self, raw):
        with pytest.raises(SingularMatrix):
            canonicalize(raw)

    @pytest.mark.parametrize(
        "raw",
        [
            [[1, 2, 3], [4, 5, 6]],
            [[1], [2]],
            [[1, 2]],
            [[1.5, 0], [0, 2]],
            [["1", "0"], ["0", "2"]],
            [[1001, 0], [0, 1001]],  # index above the 10**6 ceiling
            [[2**31, 0], [0, 1]],  # entry at the magnitude ceiling
        ],
    )
    def test_rejects_bad_input(self, raw):
        with pytest.raises(ValueError):
            canonicalize(raw)

    @settings(deadline=None)
    @given(st.lists(st.integers(min_value=-40, max_value=40), min_size=4, max_size=4))
    def test_preserves_the_lattice(self, entries):
        raw = [entries[:2], entries[2:]]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if det == 0:
            with pytest.raises(SingularMatrix):
                canonicalize(raw)
            return
        m = canonicalize(raw)
        assert m.n == abs(det)
        assert same_lattice(columns_of(raw), m.columns())
        assert canonicalize(m.rows()) == m  # idempotent


class TestInLattice:
    def test_frozen_examples(self):
        m = canonicalize([[6, 4], [0, 2]])
        assert in_lattice((0, 0), m)
        assert in_lattice((6, 0), m)
        assert in_lattice((4, 2), m)
        assert in_lattice((10, 2), m)
        assert not in_lattice((10, 4), m)
        assert not in_lattice((1, 1), m)

    @settings(deadline=None)
    @given(
        st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
        st.lists(st.integers(min_value=-12, max_value=12), min_size=4, max_size=4),
    )
    def test_agrees_with_rational_solve(self, p, entries):
        raw = [entries[:2], entries[2:]]
        if entries[0] * entries[3] - entries[1] * entries[2] == 0:
            return
        m = canonicalize(raw)
        assert in_lattice(p, m) == fraction_in_lattice(p, m.columns())


class TestReduce:
    @settings(deadline=None)
    @given(
        st.tuples(st.integers(-100, 100), st.integers(-100, 100)),
        st.integers(1, 8),
        st.integers(0, 7),
        st.integers(1, 8),
    )
    def test_reduce_is_a_coset_representative(self, p, a1, b1, b2):
        m = PeriodicityMatrix(a1, b1 % a1, 0, b2)
        r = reduce(p, m)
        assert 0 <= r[0] < a1 and 0 <= r[1] < b2
        assert in_lattice((p[0] - r[0], p[1] - r[1]), m)
        assert in_lattice(p, m) == (r == (0, 0))

    def test_representatives_are_fixed_and_distinct(self):
        m = PeriodicityMatrix(6, 4, 0, 2)
        q = quotient_index(m)
        assert len(q.reps) == 12
        for rep in q.reps:
            assert reduce(rep, m) == rep
        for i, a in enumerate(q.reps):
            for b in q.reps[i + 1 :]:
                assert not in_lattice((a[0] - b[0], a[1] - b[1]), m)

    def test_index_of_inverts_reps(self):
        q = quotient_index(PeriodicityMatrix(4, 3, 0, 1))
        for i, rep in enumerate(q.reps):
            assert q.index_of(rep) == i
            assert q.index_of((rep[0] + 4, rep[1])) == i


class TestKernelLattice:
    def test_frozen_examples(self):
        assert kernel_lattice([(1, 1, 3)]) == PeriodicityMatrix(3, 2, 0, 1)
        assert kernel_lattice([(1, 1, 2), (1, 4, 6)]) == PeriodicityMatrix(6, 4, 0, 2)
        assert kernel_lattice([(1, 0, 2), (0, 1, 2)]) == PeriodicityMatrix(2, 0, 0, 2)
        assert kernel_lattice([(2, 2, 12)]) == PeriodicityMatrix(6, 5, 0, 1)

    def test_no_relations_gives_the_full_lattice(self):
        assert kernel_lattice([]) == PeriodicityMatrix(1, 0, 0, 1)
        assert kernel_lattice([(0, 0, 5)]) == PeriodicityMatrix(1, 0, 0, 1)

    def test_exact_relation_over_the_integers(self):
        with pytest.raises(InfiniteIndex):
            kernel_lattice([(1, 0, 0)])

    def test_index_ceiling(self):
        with pytest.raises(ValueError):
            kernel_lattice([(1, 0, 2_000_000)])

    @settings(deadline=None)
    @given(
        st.lists(
            st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(1, 10)),
            min_size=1,
            max_size=2,
        )
    )
    def test_kernel_is_exactly_the_common_solutions(self, relations):
        m = kernel_lattice(relations)
        for c in m.columns():
            for alpha, beta, mod in relations:
                assert (alpha * c[0] + beta * c[1]) % mod == 0
        # completeness: every solution in a full period box lies in the lattice
        span = 1
        for _, _, mod in relations:
            span = span * mod // gcd(span, mod)
        for x in range(span):
            for y in range(span):
                if all((a * x + b * y) % mod == 0 for a, b, mod in relations):
                    assert in_lattice((x, y), m)
