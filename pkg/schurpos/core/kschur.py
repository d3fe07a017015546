"""
k-Schur Module for SchurPos
Builds the k-Schur basis at t=1 from the weak Pieri rule and computes Schur expansions,
k -> k+1 branching, omega images and k-Schur coproducts
"""

import threading
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from .config import SchurPosConfig
from .errors import KSchurError, NotInSubalgebraError, PieriError, UnitriangularityError
from .linalg import inverse_matrix, is_integral, is_lower_unitriangular, zero_matrix
from .partitions import (
    LEQ, Partition, dominance_leq, horizontal_strip_extensions, is_bounded, is_weak_horizontal_strip,
    order_key, partitions_of, require_bounded,
)
from .symfunc import SymFunc, coproduct, multiply, omega

Coordinates = Dict[Partition, Fraction]


def pieri_step(coeffs: Mapping[Partition, Fraction], r: int, k: int) -> Coordinates:
    """
    Multiply by h_r in k-Schur coordinates

    Args:
        coeffs: Coefficients on k-Schur functions indexed by k-bounded partitions
        r: Degree of the h factor, 0 <= r <= k
        k: Bound

    Returns:
        Coordinates: s_la^(k) -> sum of s_mu^(k) over weak horizontal r-strips mu/la
    """
    if r < 0 or r > k:
        raise PieriError(f"h_{r} is not a generator of the k={k} subalgebra")
    result: Coordinates = {}
    for la, c in coeffs.items():
        require_bounded(la, k)
        for mu in horizontal_strip_extensions(la, r, max_part=k):
            if is_weak_horizontal_strip(la, mu, k, r):
                result[mu] = result.get(mu, Fraction(0)) + Fraction(c)
    return {mu: c for mu, c in result.items() if c}


def h_in_kschur(la: Partition, k: int) -> Coordinates:
    """h_la in k-Schur coordinates, applying the parts in decreasing order."""
    require_bounded(la, k)
    coeffs: Coordinates = {(): Fraction(1)}
    for part in la:
        coeffs = pieri_step(coeffs, part, k)
    return coeffs


class KSchurBlock:
    """One degree of the k-Schur basis: the K matrix and its inverse"""

    def __init__(self, k: int, degree: int):
        self.k = k
        self.degree = degree
        self.partitions: List[Partition] = partitions_of(degree, max_part=k)
        self.index = {la: i for i, la in enumerate(self.partitions)}
        n = len(self.partitions)
        K = zero_matrix(n, n)
        for i, la in enumerate(self.partitions):
            for mu, c in h_in_kschur(la, k).items():
                if dominance_leq(la, mu) != LEQ:
                    raise UnitriangularityError(
                        f"h{list(la)} has k-Schur term {list(mu)} that does not dominate it (k={k})"
                    )
                K[i, self.index[mu]] = c
        if not is_lower_unitriangular(K):
            raise UnitriangularityError(f"K matrix for k={k}, degree {degree} is not unitriangular")
        self.K = K
        self.K_inverse = inverse_matrix(K)
        if not (is_integral(K) and is_integral(self.K_inverse)):
            raise UnitriangularityError(f"K matrix for k={k}, degree {degree} is not integral")


class KSchurBasis:
    """
    The k-Schur basis of Lambda_(k) up to a maximal degree

    Degree blocks are independent; each is built once (single writer) and then
    shared read-only.
    """

    def __init__(self, k: int, max_degree: int):
        if k < 1:
            raise KSchurError(f"k must be positive, got {k}")
        self.k = k
        self.max_degree = max_degree
        self._blocks: Dict[int, KSchurBlock] = {}
        self._lock = threading.Lock()

    def block(self, degree: int) -> KSchurBlock:
        if degree > self.max_degree:
            raise KSchurError(f"degree {degree} exceeds the built max_degree {self.max_degree} for k={self.k}")
        block = self._blocks.get(degree)
        if block is None:
            with self._lock:
                block = self._blocks.get(degree)
                if block is None:
                    block = self._blocks[degree] = KSchurBlock(self.k, degree)
        return block

    def h_to_kschur(self, terms: Mapping[Partition, Fraction]) -> Coordinates:
        """Coordinates of a k-bounded h expansion in the k-Schur basis."""
        result: Coordinates = {}
        for la, c in terms.items():
            block = self.block(sum(la))
            row = block.K[block.index[la]]
            for j, value in enumerate(row):
                if value:
                    mu = block.partitions[j]
                    result[mu] = result.get(mu, Fraction(0)) + c * value
        return {mu: c for mu, c in result.items() if c}

    def kschur_to_h(self, la: Partition) -> Coordinates:
        require_bounded(la, self.k)
        block = self.block(sum(la))
        row = block.K_inverse[block.index[la]]
        return {block.partitions[j]: Fraction(v) for j, v in enumerate(row) if v}


_bases: Dict[int, KSchurBasis] = {}
_bases_lock = threading.Lock()


def build_basis(k: int, max_degree: int, force: bool = False) -> KSchurBasis:
    """
    Build (or fetch) the k-Schur basis for all degrees up to max_degree

    Args:
        k: Bound
        max_degree: Largest degree to build
        force: Allow degrees above the desk-scale cap

    Returns:
        KSchurBasis: Basis with all blocks built
    """
    SchurPosConfig.check_degree(max_degree, force)
    basis = _basis(k, max_degree)
    for degree in range(max_degree + 1):
        basis.block(degree)
    return basis


def _basis(k: int, degree: int) -> KSchurBasis:
    with _bases_lock:
        basis = _bases.get(k)
        if basis is None or basis.max_degree < degree:
            grown = KSchurBasis(k, max(degree, SchurPosConfig.MAX_DEGREE_HARD_CAP))
            if basis is not None:
                grown._blocks.update(basis._blocks)
            basis = _bases[k] = grown
        return basis


def kschur_in_h(k: int, la: Partition) -> SymFunc:
    """s_la^(k) in the h basis."""
    require_bounded(la, k)
    return SymFunc(_basis(k, sum(la)).kschur_to_h(la), "h")


def kschur_in_schur(k: int, la: Partition) -> SymFunc:
    """s_la^(k) in the Schur basis."""
    return kschur_in_h(k, la).in_basis("s")


def expand_in_kschur(f: SymFunc, k: int) -> Coordinates:
    """
    Coordinates of f in the k-Schur basis

    Raises NotInSubalgebraError naming an h_mu with a part larger than k when f is not in
    Lambda_(k).
    """
    terms = f.h_terms
    for mu in sorted(terms, key=order_key):
        if not is_bounded(mu, k):
            raise NotInSubalgebraError(
                f"h{list(mu)} has a part larger than k={k}, so f is not in Z[h_1..h_{k}]", mu
            )
    return _basis(k, f.max_degree()).h_to_kschur(terms)


def branch(k: int, la: Partition) -> Coordinates:
    """Coordinates of s_la^(k) in the (k+1)-Schur basis."""
    return expand_in_kschur(kschur_in_h(k, la), k + 1)


def omega_on_kschur(k: int, la: Partition) -> Tuple[Partition, Fraction]:
    """
    The image of s_la^(k) under omega, as a single k-Schur term

    Returns:
        Tuple[Partition, Fraction]: (index, coefficient) of the unique term
    """
    image = expand_in_kschur(omega(kschur_in_h(k, la)), k)
    if len(image) != 1:
        raise KSchurError(f"omega(s{list(la)}^({k})) has {len(image)} k-Schur terms, expected one")
    (index, coefficient), = image.items()
    return index, coefficient


def kschur_coproduct(k: int, la: Partition) -> Dict[Tuple[Partition, Partition], Fraction]:
    """Structure constants of Delta(s_la^(k)) on the k-Schur (x) k-Schur basis."""
    basis = _basis(k, sum(la))
    result: Dict[Tuple[Partition, Partition], Fraction] = {}
    for (left, right), c in coproduct(kschur_in_h(k, la)).terms.items():
        left_coords = basis.h_to_kschur({left: Fraction(1)})
        right_coords = basis.h_to_kschur({right: Fraction(1)})
        for mu, a in left_coords.items():
            for nu, b in right_coords.items():
                result[(mu, nu)] = result.get((mu, nu), Fraction(0)) + c * a * b
    return {key: c for key, c in result.items() if c}


def golden_block(k: int, degree: int) -> Dict[str, object]:
    """The K matrix and its inverse as integer matrices with a partition header."""
    block = _basis(k, degree).block(degree)
    return {
        "k": k,
        "degree": degree,
        "partitions": [list(la) for la in block.partitions],
        "K": [[int(v) for v in row] for row in block.K],
        "K_inverse": [[int(v) for v in row] for row in block.K_inverse],
    }


def sign_twist_integral(j: int, sign: int) -> bool:
    """
    Whether e_j stays integral after twisting p_j to sign * p_j

    The twist changes e_j by (sign - 1) * c_j * p_j where c_j is the p_j coefficient of
    e_j; the result is tested for integral monomial coefficients.
    """
    e_p = SymFunc({(j,): 1}, "e").in_basis("p")
    c_j = e_p.coefficient((j,))
    twisted = e_p + SymFunc({(j,): (sign - 1) * c_j}, "p")
    return twisted.in_basis("m").is_integral()


def inclusion_fixes_primitives(n: int) -> bool:
    """
    p_i for i < n lies in Lambda_(n-1) and keeps the same h expansion inside Lambda_(n)

    Both subalgebras embed in Sym through their h expansions, so the inclusion sends
    each power sum to itself.
    """
    for i in range(1, n):
        p_i = SymFunc({(i,): 1}, "p")
        low = expand_in_kschur(p_i, n - 1)
        high = expand_in_kschur(p_i, n)
        low_h = SymFunc({}, "h")
        for la, c in low.items():
            low_h = low_h + kschur_in_h(n - 1, la) * c
        high_h = SymFunc({}, "h")
        for la, c in high.items():
            high_h = high_h + kschur_in_h(n, la) * c
        if not (low_h == p_i and high_h == p_i):
            return False
    return True


def kschur_product(k: int, la: Partition, mu: Partition) -> Coordinates:
    """s_la^(k) s_mu^(k) in k-Schur coordinates."""
    return expand_in_kschur(multiply(kschur_in_h(k, la), kschur_in_h(k, mu)), k)

