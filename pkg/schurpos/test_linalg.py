#!/usr/bin/env python3
"""
Tests for exact Fraction matrices
"""

import sys
from fractions import Fraction

import pytest

from core.linalg import (
    fraction_matrix, identity_matrix, inverse_matrix, is_integral, is_lower_unitriangular, left_null_space,
    null_space, rank, solve_left,
)


def test_inverse_of_unitriangular_matrix():
    K = fraction_matrix([[1, 0, 0], [1, 1, 0], [1, 2, 1]])
    assert (inverse_matrix(K) == fraction_matrix([[1, 0, 0], [-1, 1, 0], [1, -2, 1]])).all()
    assert is_lower_unitriangular(K)
    assert not is_lower_unitriangular(K.T)


def test_inverse_needs_pivoting_and_keeps_fractions():
    X = fraction_matrix([[0, 2], [3, 1]])
    inverse = inverse_matrix(X)
    assert (X.dot(inverse) == identity_matrix(2)).all()
    assert inverse[0, 0] == Fraction(-1, 6)
    assert not is_integral(inverse)


def test_inverse_errors():
    with pytest.raises(ValueError):
        inverse_matrix(fraction_matrix([[1, 2, 3]]))
    with pytest.raises(ZeroDivisionError):
        inverse_matrix(fraction_matrix([[1, 2], [2, 4]]))
    assert inverse_matrix(fraction_matrix([])).shape == (0, 0)


def test_null_spaces_and_rank():
    A = fraction_matrix([[1, 2], [2, 4], [0, 0]])
    assert rank(A) == 1
    (x,) = null_space(A)
    assert list(A.dot(x)) == [0, 0, 0]
    vectors = left_null_space(A)
    assert len(vectors) == 2
    for v in vectors:
        assert list(v.dot(A)) == [0, 0]


def test_solve_left():
    A = fraction_matrix([[2, 0], [1, 1]])
    v = solve_left(A, [Fraction(5), Fraction(3)])
    assert list(v.dot(A)) == [5, 3]
    assert list(v) == [1, 3]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
