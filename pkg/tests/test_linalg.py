from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intervalcat import linalg

small_matrices = st.integers(0, 4).flatmap(
    lambda m: st.integers(0, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m)
        .map(lambda rows, m=m, n=n: linalg.matrix(rows, (m, n)))))


def test_shapes_survive_empty_dimensions():
    A = linalg.zeros(3, 0)
    assert A.shape == (3, 0)
    assert linalg.matmul(A, linalg.zeros(0, 2)).shape == (3, 2)
    assert linalg.is_zero(linalg.matmul(A, linalg.zeros(0, 2)))
    assert linalg.rank(A) == 0
    assert linalg.nullspace(linalg.zeros(0, 3)).shape == (3, 3)


def test_rank_and_inverse():
    A = linalg.matrix([[2, 1], [1, 1]])
    assert linalg.rank(A) == 2
    assert linalg.equal(linalg.matmul(A, linalg.inverse(A)), linalg.identity(2))
    with pytest.raises(ZeroDivisionError):
        linalg.inverse(linalg.matrix([[1, 2], [2, 4]]))


def test_entries_are_exact():
    inv = linalg.inverse(linalg.matrix([[3]]))
    assert inv[0, 0] == Fraction(1, 3)
    assert linalg.format_fraction(inv[0, 0]) == "1/3"
    assert linalg.format_fraction(Fraction(-4)) == "-4/1"


def test_solve():
    A = linalg.matrix([[1, 1], [0, 1]])
    X = linalg.solve(A, linalg.matrix([[3], [1]]))
    assert X.tolist() == [[2], [1]]
    with pytest.raises(ValueError):
        linalg.solve(linalg.matrix([[1], [1]]), linalg.matrix([[0], [1]]))


@given(small_matrices)
def test_rank_nullity(A):
    N = linalg.nullspace(A)
    assert N.shape[1] == A.shape[1] - linalg.rank(A)
    assert linalg.is_zero(linalg.matmul(A, N))
    if N.size:
        assert linalg.rank(N) == N.shape[1]


@given(small_matrices)
def test_rank_matches_float_rank(A):
    # entries are tiny integers, so the floating rank is reliable
    expected = np.linalg.matrix_rank(A.astype(float)) if A.size else 0
    assert linalg.rank(A) == expected


@given(small_matrices)
def test_column_basis_spans(A):
    B = linalg.column_basis(A)
    assert B.shape[1] == linalg.rank(A)
    if A.size:
        assert linalg.rank(np.hstack([B, A])) == linalg.rank(A)
