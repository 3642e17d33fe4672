import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxkit.errors import SingularMatrix
from coxkit.linalg import (
    LatticeVector,
    QMatrix,
    determinant,
    invert,
    kernel_basis,
    lattices_equal,
    rank_of_rows,
    row_hnf,
    smith_normal_form,
    solve_square,
)
from oracles import sympy_invariant_factors, sympy_inverse

small_int = st.integers(min_value=-6, max_value=6)


def square_matrices(n_max=5):
    return st.integers(min_value=1, max_value=n_max).flatmap(
        lambda n: st.lists(
            st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


class TestLatticeVector:
    def test_immutability_and_hash(self):
        v = LatticeVector([1, 2, 3])
        with pytest.raises(AttributeError):
            v.entries = (0,)
        assert hash(v) == hash(LatticeVector((1, 2, 3)))

    def test_arithmetic(self):
        a = LatticeVector([1, 2])
        b = LatticeVector([3, -1])
        assert (a + b).entries == (4, 1)
        assert (a - b).entries == (-2, 3)
        assert (3 * a).entries == (3, 6)
        assert a.dot(b) == 1

    def test_primitive_preserves_direction(self):
        assert LatticeVector([2, -4]).primitive().entries == (1, -2)
        assert LatticeVector([-2, -4]).primitive().entries == (-1, -2)
        assert LatticeVector([0, 0]).primitive().entries == (0, 0)

    def test_sign_normalized(self):
        assert LatticeVector([-2, 4]).sign_normalized().entries == (2, -4)
        assert LatticeVector([0, 3]).sign_normalized().entries == (0, 3)

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            LatticeVector([1.5, 2])


class TestInvert:
    def test_identity(self):
        assert invert(QMatrix.identity(3)) == QMatrix.identity(3)

    def test_two_by_two(self):
        # hand-checked: multiplying back gives the identity
        m = QMatrix([[2, 1], [1, 1]])
        inv = invert(m)
        assert inv == QMatrix([[1, -1], [-1, 2]])
        assert m @ inv == QMatrix.identity(2)

    def test_singular_raises(self):
        with pytest.raises(SingularMatrix):
            invert(QMatrix([[1, 2], [2, 4]]))

    def test_rational_entries(self):
        m = QMatrix([[Fraction(1, 2), 0], [0, Fraction(3)]])
        assert invert(m) == QMatrix([[2, 0], [0, Fraction(1, 3)]])

    @settings(max_examples=60, deadline=None)
    @given(square_matrices(4))
    def test_matches_sympy_and_multiplies_back(self, rows):
        m = QMatrix(rows)
        if determinant(m) == 0:
            with pytest.raises(SingularMatrix):
                invert(m)
            return
        inv = invert(m)
        assert m @ inv == QMatrix.identity(m.rows)
        assert inv == QMatrix(sympy_inverse(rows))
        assert determinant(m) * determinant(inv) == 1


class TestDeterminant:
    def test_identity(self):
        assert determinant(QMatrix.identity(4)) == 1

    def test_known_values(self):
        assert determinant(QMatrix([[2, 1], [1, 1]])) == 1
        assert determinant(QMatrix([[0, 1], [1, 0]])) == -1
        assert determinant(QMatrix([[1, 2], [2, 4]])) == 0

    @settings(max_examples=60, deadline=None)
    @given(square_matrices(5))
    def test_matches_expansion_by_sympy(self, rows):
        from sympy import Matrix

        assert determinant(QMatrix(rows)) == Fraction(int(Matrix(rows).det()))


class TestRowHNF:
    def test_canonical_and_idempotent(self):
        rows = [(1, 0, -1), (0, 1, -1)]
        h = row_hnf(rows)
        assert tuple(v.entries for v in h) == ((1, 0, -1), (0, 1, -1))
        assert row_hnf([v.entries for v in h]) == h

    def test_reduction_above_pivot(self):
        h = row_hnf([(2, 1), (0, 3)])
        # pivots positive, entry above the second pivot reduced into [0, 3)
        assert tuple(v.entries for v in h) == ((2, 1), (0, 3))

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=1, max_size=4))
    def test_idempotent_and_spans_same_lattice(self, rows):
        h = row_hnf(rows)
        assert row_hnf([v.entries for v in h]) == h
        assert lattices_equal(rows, [v.entries for v in h])
        # row count equals the rank
        assert len(h) == rank_of_rows(rows)


class TestKernelBasis:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(QMatrix.identity(3)) == []

    def test_sum_functional(self):
        got = kernel_basis(QMatrix([[1, 1, 1]]))
        assert [v.entries for v in got] == [(1, 0, -1), (0, 1, -1)]

    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=1, max_size=3)
    )
    def test_kernel_annihilates_and_is_saturated(self, rows):
        m = QMatrix(rows)
        basis = kernel_basis(m)
        for v in basis:
            assert all(x == 0 for x in m.mul_vector(list(v)))
        # saturation: the HNF basis spans the full rational kernel lattice
        assert len(basis) == m.cols - rank_of_rows(rows)
        if basis:
            _u, d, _v = smith_normal_form(QMatrix([list(v) for v in basis]))
            diag = [int(d.entry(i, i)) for i in range(d.rows)]
            assert all(x == 1 for x in diag)


class TestSmithNormalForm:
    def test_spec_values(self):
        _u, d, _v = smith_normal_form(QMatrix([[2, 0], [0, 3]]))
        assert d == QMatrix([[1, 0], [0, 6]])

    def test_zero_matrix(self):
        u, d, v = smith_normal_form(QMatrix([[0, 0], [0, 0]]))
        assert d == QMatrix.zeros(2, 2)
        assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1

    @settings(max_examples=80, deadline=None)
    @given(
        st.tuples(
            st.integers(min_value=2, max_value=4), st.integers(min_value=2, max_value=4)
        ).flatmap(
            lambda shape: st.lists(
                st.lists(small_int, min_size=shape[1], max_size=shape[1]),
                min_size=shape[0],
                max_size=shape[0],
            )
        )
    )
    def test_decomposition_and_divisibility(self, rows):
        m = QMatrix(rows)
        u, d, v = smith_normal_form(m)
        assert u @ m @ v == d
        assert abs(determinant(u)) == 1
        assert abs(determinant(v)) == 1
        diag = [int(d.entry(i, i)) for i in range(min(d.rows, d.cols))]
        for i in range(d.rows):
            for j in range(d.cols):
                if i != j:
                    assert d.entry(i, j) == 0
        for a, b in zip(diag, diag[1:]):
            if a != 0:
                assert b % a == 0
            else:
                assert b == 0
        assert all(x >= 0 for x in diag)
        nonzero = tuple(x for x in diag if x != 0)
        oracle = tuple(x for x in sympy_invariant_factors(rows) if x != 0)
        assert nonzero == oracle


class TestSolveSquare:
    def test_exact_solution(self):
        m = QMatrix([[2, 1], [1, 1]])
        x = solve_square(m, [3, 2])
        assert list(x) == [1, 1]

    def test_fractional_solution(self):
        x = solve_square(QMatrix([[2, 0], [0, 2]]), [1, 3])
        assert list(x) == [Fraction(1, 2), Fraction(3, 2)]


def test_lattice_equality_is_basis_independent():
    rng = random.Random(5)
    rows = [(1, 2, 0), (0, 4, 1)]
    mixed = [
        tuple(a + 3 * b for a, b in zip(rows[0], rows[1])),
        tuple(-x for x in rows[1]),
    ]
    assert lattices_equal(rows, mixed)
    assert not lattices_equal(rows, [(1, 2, 0), (0, 8, 2)])
    del rng
