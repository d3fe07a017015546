#!/usr/bin/env python3
"""
Tests for the monomial evaluation oracle: every basis conversion must agree with a
direct expansion in explicit variables
"""

import sys

import pytest
import sympy as sp

from core.errors import OracleError
from core.oracle import monomial_eval_oracle
from core.partitions import partitions_of
from core.symfunc import BASES, basis_element, e, h, m, p, s

x1, x2, x3 = sp.symbols("x1:4")


def test_small_expansions():
    assert monomial_eval_oracle(e(2), 2).as_expr() == x1 * x2
    assert monomial_eval_oracle(p(2), 2).as_expr() == x1**2 + x2**2
    expected = sp.expand(
        x1**2 * x2 + x1**2 * x3 + x2**2 * x1 + x2**2 * x3 + x3**2 * x1 + x3**2 * x2 + 2 * x1 * x2 * x3
    )
    assert sp.expand(monomial_eval_oracle(s(2, 1), 3).as_expr() - expected) == 0


def test_generators_and_monomials():
    assert monomial_eval_oracle(h(2), 2).as_expr() == x1**2 + x1 * x2 + x2**2
    assert monomial_eval_oracle(e(3), 3).as_expr() == x1 * x2 * x3
    assert monomial_eval_oracle(m(2, 1), 2).as_expr() == x1**2 * x2 + x1 * x2**2
    assert monomial_eval_oracle(m(1, 1, 1), 3).as_expr() == x1 * x2 * x3
    assert monomial_eval_oracle(e(2, 1), 2).as_expr() == sp.expand(x1 * x2 * (x1 + x2))
    assert monomial_eval_oracle(h(2) - h(2), 2).is_zero


def test_rational_coefficients_survive():
    f = basis_element("h", (2,)).in_basis("p")
    assert monomial_eval_oracle(f, 2) == monomial_eval_oracle(basis_element("h", (2,)), 2)
    assert sp.Rational(1, 2) in monomial_eval_oracle(basis_element("p", (2,)) / 2, 2).coeffs()


def test_conversions_agree_with_oracle():
    n_vars = 4
    for degree in range(1, 5):
        for la in partitions_of(degree):
            for source in BASES:
                f = basis_element(source, la)
                expected = monomial_eval_oracle(f, n_vars)
                for target in BASES:
                    assert monomial_eval_oracle(f.in_basis(target), n_vars) == expected


def test_too_few_variables():
    with pytest.raises(OracleError):
        monomial_eval_oracle(s(2, 1), 2)
    with pytest.raises(OracleError):
        monomial_eval_oracle(s(), 0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
