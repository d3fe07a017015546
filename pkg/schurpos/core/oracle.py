"""
Monomial Evaluation Oracle for SchurPos
Expands a symmetric function into an explicit polynomial in finitely many variables,
straight from the combinatorial definition of each basis
"""

from functools import lru_cache, reduce
from itertools import combinations, product
from typing import Tuple

import sympy as sp
from sympy.utilities.iterables import multiset_permutations

from .errors import OracleError
from .partitions import Partition
from .symfunc import SymFunc


@lru_cache(maxsize=None)
def _gens(n_vars: int) -> Tuple[sp.Symbol, ...]:
    return tuple(sp.symbols(f"x1:{n_vars + 1}"))


def _poly(expr, n_vars: int) -> sp.Poly:
    return sp.Poly(expr, *_gens(n_vars), domain="QQ")


@lru_cache(maxsize=None)
def _h_poly(n: int, n_vars: int) -> sp.Poly:
    """All monomials of degree n."""
    return _poly(sp.Add(*sp.itermonomials(_gens(n_vars), n, n)), n_vars)


@lru_cache(maxsize=None)
def _e_poly(n: int, n_vars: int) -> sp.Poly:
    """Square-free monomials of degree n."""
    return _poly(sp.Add(*(sp.Mul(*chosen) for chosen in combinations(_gens(n_vars), n))), n_vars)


@lru_cache(maxsize=None)
def _p_poly(n: int, n_vars: int) -> sp.Poly:
    return _poly(sp.Add(*(x**n for x in _gens(n_vars))), n_vars)


@lru_cache(maxsize=None)
def _m_poly(la: Partition, n_vars: int) -> sp.Poly:
    """Sum over the distinct rearrangements of la padded with zeros."""
    if len(la) > n_vars:
        return _poly(0, n_vars)
    padded = list(la) + [0] * (n_vars - len(la))
    exponents = {tuple(exp): 1 for exp in multiset_permutations(padded)}
    return sp.Poly.from_dict(exponents, *_gens(n_vars), domain="QQ")


@lru_cache(maxsize=None)
def _s_poly(la: Partition, used: int, n_vars: int) -> sp.Poly:
    """Semistandard tableaux in x_1..x_used, peeling off the horizontal strip of the largest entry."""
    if not la:
        return _poly(1, n_vars)
    if len(la) > used:
        return _poly(0, n_vars)
    x = _gens(n_vars)[used - 1]
    lower = la[1:] + (0,)
    result = _poly(0, n_vars)
    for choice in product(*(range(lo, hi + 1) for lo, hi in zip(lower, la))):
        mu = tuple(part for part in choice if part > 0)
        strip = _poly(x ** (sum(la) - sum(mu)), n_vars)
        result = result + _s_poly(mu, used - 1, n_vars) * strip
    return result


@lru_cache(maxsize=None)
def _basis_poly(tag: str, la: Partition, n_vars: int) -> sp.Poly:
    if tag == "m":
        return _m_poly(la, n_vars)
    if tag == "s":
        return _s_poly(la, n_vars, n_vars)
    generator = {"h": _h_poly, "e": _e_poly, "p": _p_poly}[tag]
    return reduce(lambda acc, part: acc * generator(part, n_vars), la, _poly(1, n_vars))


def monomial_eval_oracle(f: SymFunc, n_vars: int) -> sp.Poly:
    """
    Expand f in x_1, ..., x_N from the definitions of its own basis

    Args:
        f: Symmetric function in any basis
        n_vars: Number of variables N; must be at least the degree of f

    Returns:
        sp.Poly: The polynomial f(x_1, ..., x_N) with rational coefficients
    """
    if n_vars < 1 or n_vars < f.max_degree():
        raise OracleError(f"{n_vars} variables alias a symmetric function of degree {f.max_degree()}")
    total = _poly(0, n_vars)
    for la, c in f.terms.items():
        total = total + _basis_poly(f.basis, la, n_vars).mul_ground(sp.Rational(c.numerator, c.denominator))
    return total
