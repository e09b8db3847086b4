from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgkit.linalg import GF101, QQ, NoSolution, PrimeField, Subspace, kernel_basis, rank, rref, solve, span


def matrices(max_rows=6, max_cols=6, p=101):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(100)


def test_rank_known_values():
    # ranks checked against sympy's DomainMatrix over GF(101)
    m = GF101.array([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0], [5, 0, 2, 100]])
    assert rank(m) == 3
    m2 = GF101.array([[3, 1, 4, 1, 5], [9, 2, 6, 5, 3], [5, 8, 9, 7, 9], [3, 2, 3, 8, 4], [12, 3, 10, 6, 8]])
    assert rank(m2) == 4
    assert rank(QQ.array([[3, 1, 4, 1, 5], [9, 2, 6, 5, 3], [5, 8, 9, 7, 9], [3, 2, 3, 8, 4], [12, 3, 10, 6, 8]]), QQ) == 4


def test_rref_is_reduced():
    red, piv, r = rref(GF101.array([[0, 2, 4], [1, 1, 1], [1, 3, 5]]))
    assert piv == [0, 1] and r == 2
    assert red[0].tolist() == [1, 0, 100] and red[1].tolist() == [0, 1, 2]


def test_characteristic_matters():
    m = [[1, 1], [1, 1 + 101]]
    assert rank(GF101.array(m)) == 1
    assert rank(QQ.array(m), QQ) == 2


def test_solve_and_inconsistent():
    m = GF101.array([[1, 2], [3, 4]])
    x = solve(m, [5, 6])
    assert np.array_equal(GF101.matmul(m, x), GF101.array([5, 6]))
    with pytest.raises(NoSolution):
        solve(GF101.array([[1, 1], [2, 2]]), [1, 3])


def test_rational_solve():
    x = solve(QQ.array([[2, 0], [0, 3]]), [1, 1], QQ)
    assert list(x) == [Fraction(1, 2), Fraction(1, 3)]


def test_subspace_operations():
    U = span([[1, 0, 0], [0, 1, 0]], 3)
    V = span([[0, 1, 0], [0, 0, 1]], 3)
    assert (U + V).dim == 3
    assert U.intersect(V) == span([[0, 1, 0]], 3)
    assert U.contains(GF101.array([5, 7, 0])) and not U.contains(GF101.array([0, 0, 1]))
    assert U.complement_coords() == [2]
    assert Subspace.zero(3).dim == 0 and Subspace.full(3).dim == 3


@given(matrices())
def test_rank_nullity(rows):
    m = GF101.array(rows)
    K = kernel_basis(m)
    assert rank(m) + K.shape[0] == m.shape[1]
    if K.shape[0]:
        assert not np.any(GF101.matmul(m, K.T))


@given(matrices(), st.integers(0, 100))
def test_subspace_is_canonical(rows, c):
    m = GF101.array(rows)
    U = span(m, m.shape[1])
    # scaling and reordering the spanning set does not change the subspace
    shuffled = GF101.reduce(m[::-1] * (c or 1))
    assert span(shuffled, m.shape[1]) == U
    assert U.contains_space(span(m[:1], m.shape[1]))


@given(matrices(4, 5), matrices(4, 5))
def test_intersection_dimension_formula(a, b):
    n = min(len(a[0]), len(b[0]))
    U = span([r[:n] for r in a], n)
    V = span([r[:n] for r in b], n)
    assert (U + V).dim + U.intersect(V).dim == U.dim + V.dim


@given(matrices(5, 5, p=7))
def test_rational_and_modular_agree_on_small_integer_matrices_generically(rows):
    # rank over Q is at least the rank mod p
    assert rank(QQ.array(rows), QQ) >= rank(GF101.array(rows))
