"""
Schur P/Q Module for SchurPos
One-row and multi-row Schur P and Q functions, the theta map, membership in the ring
generated by the odd one-row P functions, and the positivity checks built on them
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from .config import SchurPosConfig
from .errors import (
    EvenPowerSumError, GeneratorBoundError, NonIntegralExpansionError, PartitionError, SchurPosError,
    error_dict,
)
from .kschur import expand_in_kschur
from .linalg import solve_left, zero_matrix
from .partitions import Partition, StrictPartition, make_strict_partition, order_key, partitions_of
from .symfunc import ONE, SymFunc, basis_element, multiply

Terms = Dict[Partition, Fraction]


# ---------------------------------------------------------------------------
# One-row functions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_row(r: int) -> SymFunc:
    """
    Q_r = sum_{j=0}^r e_j h_(r-j)

    Args:
        r: Degree, r >= 0

    Returns:
        SymFunc: Q_r in the h basis (q_row(0) = 1)
    """
    if r < 0:
        raise PartitionError(f"Q_r needs r >= 0, got {r}")
    total = SymFunc({}, "h")
    for j in range(r + 1):
        e_j = basis_element("e", (j,) if j else ())
        h_rest = basis_element("h", (r - j,) if r - j else ())
        total = total + multiply(e_j, h_rest)
    return total


@lru_cache(maxsize=None)
def p_row(r: int) -> SymFunc:
    """P_r = Q_r / 2 for r >= 1."""
    if r < 1:
        raise PartitionError(f"P_r is only defined here for r >= 1, got {r}")
    return q_row(r) / 2


def p_coefficient_check(i: int) -> Fraction:
    """Coefficient of p_(i) in the power-sum expansion of P_i (1/i for odd i)."""
    return p_row(i).in_basis("p").coefficient((i,))


# ---------------------------------------------------------------------------
# Multi-row functions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _q_pair(r: int, s: int) -> SymFunc:
    """Q_(r,s) = Q_r Q_s + 2 sum_{i=1}^s (-1)^i Q_(r+i) Q_(s-i), antisymmetric in (r, s)."""
    if r < s:
        return -_q_pair(s, r)
    total = multiply(q_row(r), q_row(s))
    for i in range(1, s + 1):
        total = total + multiply(q_row(r + i), q_row(s - i)) * (2 * (-1) ** i)
    return total


@lru_cache(maxsize=None)
def _pfaffian(parts: Tuple[int, ...]) -> SymFunc:
    """Pfaffian of (Q_(parts_i, parts_j)) expanded along the first row."""
    if not parts:
        return ONE
    first, rest = parts[0], parts[1:]
    total = SymFunc({}, "h")
    for position, part in enumerate(rest):
        minor = rest[:position] + rest[position + 1:]
        term = multiply(_q_pair(first, part), _pfaffian(minor))
        total = total + (term if position % 2 == 0 else -term)
    return total


def q_lambda(la: StrictPartition) -> SymFunc:
    """
    Schur Q-function of a strict partition

    Args:
        la: Strictly decreasing parts

    Returns:
        SymFunc: Q_la in the h basis; a zero part is appended when the length is odd
    """
    la = make_strict_partition(la)
    if len(la) == 1:
        return q_row(la[0])
    padded = la + (0,) if len(la) % 2 else la
    return _pfaffian(padded)


def p_lambda(la: StrictPartition) -> SymFunc:
    """P_la = 2^(-length) Q_la."""
    la = make_strict_partition(la)
    return q_lambda(la) / 2 ** len(la)


# ---------------------------------------------------------------------------
# theta
# ---------------------------------------------------------------------------

def theta(f: SymFunc) -> SymFunc:
    """
    The ring morphism p_(2i) -> 0, p_(2i+1) -> 2 p_(2i+1)

    Returns:
        SymFunc: theta(f) in the p basis
    """
    result: Terms = {}
    for la, c in f.in_basis("p").terms.items():
        if any(part % 2 == 0 for part in la):
            continue
        result[la] = c * 2 ** len(la)
    return SymFunc(result, "p")


# ---------------------------------------------------------------------------
# Gamma membership
# ---------------------------------------------------------------------------

class GammaElement:
    """A symmetric function together with its expansion in monomials of P_1, P_3, P_5, ..."""

    def __init__(self, sym: SymFunc, gamma_terms: Terms):
        self.sym = sym
        self.gamma_terms = {mu: Fraction(c) for mu, c in gamma_terms.items() if c}

    def sorted_terms(self) -> List[Tuple[Partition, Fraction]]:
        return sorted(self.gamma_terms.items(), key=lambda item: order_key(item[0]))

    def reconstruct(self) -> SymFunc:
        """Multiply the generator monomials back out."""
        total = SymFunc({}, "h")
        for mu, c in self.gamma_terms.items():
            total = total + _p_monomial(mu) * c
        return total

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.gamma_terms.values())

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*P{list(mu)}" for mu, c in self.sorted_terms())
        return f"GammaElement({terms or '0'})"


@lru_cache(maxsize=None)
def _p_monomial(mu: Partition) -> SymFunc:
    """prod_i P_(mu_i)"""
    result = ONE
    for part in mu:
        result = multiply(result, p_row(part))
    return result


@lru_cache(maxsize=None)
def _odd_block(degree: int) -> Tuple[List[Partition], Any]:
    """Odd partitions of one degree and the matrix of P-monomials in the p basis."""
    odd = partitions_of(degree, odd_parts=True)
    index = {la: i for i, la in enumerate(odd)}
    A = zero_matrix(len(odd), len(odd))
    for i, mu in enumerate(odd):
        for la, c in _p_monomial(mu).in_basis("p").terms.items():
            A[i, index[la]] = c
    return odd, A


def gamma_expand(f: SymFunc, generator_bound: Optional[int] = None) -> GammaElement:
    """
    Expand f as an integral polynomial in the odd one-row P functions

    Args:
        f: Symmetric function
        generator_bound: Largest odd generator index allowed (None for no bound)

    Returns:
        GammaElement: f with its generator-monomial coefficients
    """
    p_terms = f.in_basis("p").terms
    for la in sorted(p_terms, key=order_key):
        if any(part % 2 == 0 for part in la):
            raise EvenPowerSumError(f"p{list(la)} has an even part, so f is not in Gamma")

    by_degree: Dict[int, Terms] = {}
    for la, c in p_terms.items():
        by_degree.setdefault(sum(la), {})[la] = c
    gamma_terms: Terms = {}
    for degree in sorted(by_degree):
        odd, A = _odd_block(degree)
        b = [by_degree[degree].get(la, Fraction(0)) for la in odd]
        for mu, c in zip(odd, solve_left(A, b)):
            if c:
                gamma_terms[mu] = Fraction(c)

    if generator_bound is not None:
        for mu in sorted(gamma_terms, key=order_key):
            if mu[0] > generator_bound:
                raise GeneratorBoundError(
                    f"P{list(mu)} uses generator P_{mu[0]} beyond the bound P_{generator_bound}"
                )
    for mu in sorted(gamma_terms, key=order_key):
        if gamma_terms[mu].denominator != 1:
            raise NonIntegralExpansionError(
                f"coefficient {gamma_terms[mu]} of P{list(mu)} is not an integer"
            )
    return GammaElement(f, gamma_terms)


# ---------------------------------------------------------------------------
# Positivity sweeps
# ---------------------------------------------------------------------------

def _is_nonnegative_integral(terms: Terms) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in terms.values())


def verify_p_positivity(max_degree: int, force: bool = False) -> Dict[str, Any]:
    """
    Check that every P_la with |la| <= max_degree is integral and Schur positive

    Returns:
        Dict[str, Any]: Report with one item per strict partition
    """
    SchurPosConfig.check_degree(max_degree, force)
    items = []
    for degree in range(1, max_degree + 1):
        for la in partitions_of(degree, strict=True):
            schur = p_lambda(la).in_basis("s")
            integral = all(f.is_integral() for f in (schur, p_lambda(la).in_basis("m")))
            positive = _is_nonnegative_integral(schur.terms)
            items.append({
                "partition": list(la),
                "schur": schur,
                "integral": integral,
                "schur_nonnegative": positive,
                "passed": integral and positive,
            })
    failures = sum(1 for item in items if not item["passed"])
    return {"checked": len(items), "failures": failures, "passed": failures == 0, "items": items}


def kschur_positivity_of_p(n: int) -> Dict[str, Any]:
    """
    Gamma_n sits inside Lambda_(2n-1) with (2n-1)-Schur positive P functions

    Checks each odd generator P_i (i <= 2n-1) and each P_la with |la| < n: the element
    expands in generators bounded by 2n-1 and its (2n-1)-Schur coordinates are
    nonnegative integers.
    """
    k = 2 * n - 1
    subjects: List[Tuple[str, Partition, SymFunc]] = []
    for i in range(1, k + 1, 2):
        subjects.append(("generator", (i,), p_row(i)))
    for degree in range(1, n):
        for la in partitions_of(degree, strict=True):
            subjects.append(("strict", la, p_lambda(la)))

    items = []
    for kind, la, f in subjects:
        item: Dict[str, Any] = {"kind": kind, "partition": list(la), "k": k}
        try:
            gamma_expand(f, k)
            coordinates = expand_in_kschur(f, k)
            item["kschur"] = coordinates
            item["passed"] = _is_nonnegative_integral(coordinates)
        except SchurPosError as e:
            item.update(error_dict(e))
            item["passed"] = False
        items.append(item)
    failures = sum(1 for item in items if not item["passed"])
    return {"n": n, "checked": len(items), "failures": failures, "passed": failures == 0, "items": items}
