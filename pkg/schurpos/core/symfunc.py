"""
Symmetric Function Module for SchurPos
Exact graded arithmetic on Sym in the m/e/h/p/s bases: conversions, product, coproduct,
omega, antipode, Hall pairing, the character chi_Sym and primitive elements
"""

import json
import os
import sys
import tempfile
import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np

from .config import SchurPosConfig
from .errors import PartitionError
from .linalg import inverse_matrix, left_null_space, zero_matrix
from .partitions import Partition, make_partition, order_key, partitions_of, sort_partition

Scalar = Union[int, Fraction]
Terms = Dict[Partition, Fraction]

BASES = SchurPosConfig.BASES


def _check_basis(tag: str) -> str:
    if tag not in BASES:
        raise PartitionError(f"unknown basis {tag!r}, expected one of {BASES}")
    return tag


def _normalize(terms: Mapping[Partition, Scalar]) -> Terms:
    result: Terms = {}
    for la, c in terms.items():
        c = Fraction(c)
        if c:
            key = tuple(la)
            result[key] = result.get(key, Fraction(0)) + c
            if not result[key]:
                del result[key]
    return result


def _mult_product(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction]) -> Terms:
    """Product in a multiplicative basis: X_la * X_mu = X_(la union mu)."""
    result: Terms = {}
    for la, c in a.items():
        for mu, d in b.items():
            key = sort_partition(la + mu)
            result[key] = result.get(key, Fraction(0)) + c * d
    return {k: v for k, v in result.items() if v}


def _mult_power(generator: Callable[[int], Terms], la: Partition) -> Terms:
    result: Terms = {(): Fraction(1)}
    for part in la:
        result = _mult_product(result, generator(part))
    return result


# ---------------------------------------------------------------------------
# Generator recurrences (each returns a dict that callers must not mutate)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _e_in_h(n: int) -> Terms:
    """e_n = sum_{i=1}^n (-1)^(i-1) h_i e_(n-i)."""
    if n == 0:
        return {(): Fraction(1)}
    result: Terms = {}
    for i in range(1, n + 1):
        sign = 1 if i % 2 else -1
        for la, c in _mult_product({(i,): Fraction(1)}, _e_in_h(n - i)).items():
            result[la] = result.get(la, Fraction(0)) + sign * c
    return {k: v for k, v in result.items() if v}


@lru_cache(maxsize=None)
def _h_in_e(n: int) -> Terms:
    """h_n = sum_{i=1}^n (-1)^(i-1) e_i h_(n-i), read in the e basis."""
    if n == 0:
        return {(): Fraction(1)}
    result: Terms = {}
    for i in range(1, n + 1):
        sign = 1 if i % 2 else -1
        for la, c in _mult_product({(i,): Fraction(1)}, _h_in_e(n - i)).items():
            result[la] = result.get(la, Fraction(0)) + sign * c
    return {k: v for k, v in result.items() if v}


@lru_cache(maxsize=None)
def _p_in_h(n: int) -> Terms:
    """Newton: p_n = n h_n - sum_{i=1}^{n-1} p_i h_(n-i)."""
    if n == 0:
        return {(): Fraction(1)}
    result: Terms = {(n,): Fraction(n)}
    for i in range(1, n):
        for la, c in _mult_product(_p_in_h(i), {(n - i,): Fraction(1)}).items():
            result[la] = result.get(la, Fraction(0)) - c
    return {k: v for k, v in result.items() if v}


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> Terms:
    """Newton: n h_n = sum_{i=1}^n p_i h_(n-i), read in the p basis."""
    if n == 0:
        return {(): Fraction(1)}
    result: Terms = {}
    for i in range(1, n + 1):
        for la, c in _mult_product({(i,): Fraction(1)}, _h_in_p(n - i)).items():
            result[la] = result.get(la, Fraction(0)) + c / n
    return {k: v for k, v in result.items() if v}


@lru_cache(maxsize=None)
def _jacobi_trudi(la: Partition) -> Terms:
    """s_la = det(h_(la_i - i + j)) expanded by minors along the rows."""
    n = len(la)

    @lru_cache(maxsize=None)
    def minor(row: int, columns: Tuple[int, ...]) -> Terms:
        if row == n:
            return {(): Fraction(1)}
        result: Terms = {}
        for position, col in enumerate(columns):
            index = la[row] - row + col
            if index < 0:
                continue
            sign = -1 if position % 2 else 1
            rest = columns[:position] + columns[position + 1:]
            for mu, c in minor(row + 1, rest).items():
                key = sort_partition(mu + ((index,) if index else ()))
                result[key] = result.get(key, Fraction(0)) + sign * c
        return {k: v for k, v in result.items() if v}

    return minor(0, tuple(range(n)))


@lru_cache(maxsize=None)
def _count_matrices(rows: Tuple[int, ...], columns: Tuple[int, ...]) -> int:
    """Number of N-matrices with the given row and column sums."""
    if not rows:
        return 1 if not any(columns) else 0
    total = 0
    first, rest = rows[0], rows[1:]

    def distribute(i: int, remaining: int, used: List[int]) -> None:
        nonlocal total
        if i == len(columns):
            if remaining == 0:
                left = tuple(sorted((c - u for c, u in zip(columns, used)), reverse=True))
                total += _count_matrices(rest, left)
            return
        for take in range(min(remaining, columns[i]), -1, -1):
            distribute(i + 1, remaining - take, used + [take])

    distribute(0, first, [])
    return total


def z_factor(la: Partition) -> int:
    """z_la = prod_i i^(m_i) m_i!"""
    result = 1
    for part in set(la):
        multiplicity = la.count(part)
        result *= part ** multiplicity * factorial(multiplicity)
    return result


# ---------------------------------------------------------------------------
# Transition matrices
# ---------------------------------------------------------------------------

def _terms_row(terms: Mapping[Partition, Fraction], index: Dict[Partition, int], size: int) -> List[Fraction]:
    row = [Fraction(0)] * size
    for la, c in terms.items():
        row[index[la]] += c
    return row


def _build_to_h(degree: int, source: str) -> np.ndarray:
    basis = partitions_of(degree)
    index = {la: i for i, la in enumerate(basis)}
    if source == "e":
        rows = [_terms_row(_mult_power(_e_in_h, la), index, len(basis)) for la in basis]
    elif source == "p":
        rows = [_terms_row(_mult_power(_p_in_h, la), index, len(basis)) for la in basis]
    elif source == "s":
        rows = [_terms_row(_jacobi_trudi(la), index, len(basis)) for la in basis]
    elif source == "m":
        return inverse_matrix(_build_from_h(degree, "m"))
    else:
        rows = [[Fraction(i == j) for j in range(len(basis))] for i in range(len(basis))]
    M = zero_matrix(len(basis), len(basis))
    for i, row in enumerate(rows):
        M[i, :] = row
    return M


def _build_from_h(degree: int, target: str) -> np.ndarray:
    basis = partitions_of(degree)
    index = {la: i for i, la in enumerate(basis)}
    M = zero_matrix(len(basis), len(basis))
    for i, la in enumerate(basis):
        if target == "e":
            M[i, :] = _terms_row(_mult_power(_h_in_e, la), index, len(basis))
        elif target == "p":
            M[i, :] = _terms_row(_mult_power(_h_in_p, la), index, len(basis))
        elif target == "m":
            M[i, :] = [Fraction(_count_matrices(la, mu)) for mu in basis]
        elif target == "h":
            M[i, i] = Fraction(1)
    if target == "s":
        return inverse_matrix(_build_to_h(degree, "s"))
    return M


class TransitionCache:
    """
    Per-degree exact transition matrices keyed by (degree, source, target)

    Row i of a matrix expands the i-th source basis element (in partitions_of order)
    in the target basis. Missing entries may be computed by any caller; inserts are
    idempotent and only completed matrices are ever stored. With a cache directory the
    matrices are also persisted as JSON.
    """

    def __init__(self, cache_dir: Optional[str] = None):
        self.cache_dir = cache_dir
        self._matrices: Dict[Tuple[int, str, str], np.ndarray] = {}
        self._lock = threading.Lock()

    def _path(self, key: Tuple[int, str, str]) -> Optional[str]:
        if not self.cache_dir:
            return None
        degree, source, target = key
        return os.path.join(self.cache_dir, f"transition_d{degree}_{source}_{target}.json")

    def _load(self, key: Tuple[int, str, str]) -> Optional[np.ndarray]:
        path = self._path(key)
        if not path or not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            basis = [tuple(la) for la in data["partitions"]]
            if basis != partitions_of(key[0]):
                return None
            M = zero_matrix(len(basis), len(basis))
            for i, row in enumerate(data["rows"]):
                M[i, :] = [Fraction(num, den) for num, den in row]
            return M
        except (OSError, ValueError, KeyError, TypeError) as e:
            print(f"⚠️ Ignoring unreadable cache file {path}: {e}", file=sys.stderr)
            return None

    def _store(self, key: Tuple[int, str, str], M: np.ndarray) -> None:
        path = self._path(key)
        if not path:
            return
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            payload = {
                "partitions": [list(la) for la in partitions_of(key[0])],
                "rows": [[[v.numerator, v.denominator] for v in row] for row in M],
            }
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(payload, f)
            os.replace(tmp, path)
        except OSError as e:
            print(f"⚠️ Could not persist transition matrix to {path}: {e}", file=sys.stderr)

    def get(self, degree: int, source: str, target: str) -> np.ndarray:
        """
        Get the transition matrix from source to target in one degree

        Args:
            degree: Homogeneous degree
            source: Source basis tag
            target: Target basis tag

        Returns:
            np.ndarray: Object matrix of Fractions
        """
        key = (degree, _check_basis(source), _check_basis(target))
        M = self._matrices.get(key)
        if M is not None:
            return M
        M = self._load(key)
        if M is None:
            if target == "h":
                M = _build_to_h(degree, source)
            elif source == "h":
                M = _build_from_h(degree, target)
            else:
                M = self.get(degree, source, "h").dot(self.get(degree, "h", target))
            self._store(key, M)
        with self._lock:
            return self._matrices.setdefault(key, M)

    def clear(self) -> None:
        with self._lock:
            self._matrices.clear()


TRANSITIONS = TransitionCache(SchurPosConfig.CACHE_DIR)


def convert_terms(terms: Mapping[Partition, Fraction], source: str, target: str,
                  cache: Optional[TransitionCache] = None) -> Terms:
    """Change basis degree by degree."""
    if source == target:
        return dict(terms)
    cache = cache or TRANSITIONS
    by_degree: Dict[int, Dict[Partition, Fraction]] = {}
    for la, c in terms.items():
        by_degree.setdefault(sum(la), {})[la] = c
    result: Terms = {}
    for degree, part in by_degree.items():
        basis = partitions_of(degree)
        index = {la: i for i, la in enumerate(basis)}
        M = cache.get(degree, source, target)
        row = [Fraction(0)] * len(basis)
        for la, c in part.items():
            i = index[la]
            for j in range(len(basis)):
                if M[i, j]:
                    row[j] += c * M[i, j]
        for j, c in enumerate(row):
            if c:
                result[basis[j]] = c
    return result


# ---------------------------------------------------------------------------
# SymFunc
# ---------------------------------------------------------------------------

class SymFunc:
    """
    A finitely supported symmetric function with exact rational coefficients

    The terms are stored in the basis named by `basis`; arithmetic happens in the
    canonical h basis. Zero coefficients are never stored, so equality is structural
    on the h form.
    """

    __slots__ = ("_terms", "_basis", "_h_cache")

    def __init__(self, terms: Optional[Mapping[Iterable[int], Scalar]] = None, basis: str = "h"):
        self._basis = _check_basis(basis)
        normalized = {}
        for la, c in (terms or {}).items():
            normalized[make_partition(la)] = c
        self._terms = _normalize(normalized)
        self._h_cache: Optional[Terms] = self._terms if basis == "h" else None

    @property
    def basis(self) -> str:
        return self._basis

    @property
    def terms(self) -> Terms:
        return dict(self._terms)

    @property
    def h_terms(self) -> Terms:
        if self._h_cache is None:
            self._h_cache = convert_terms(self._terms, self._basis, "h")
        return dict(self._h_cache)

    def coefficient(self, la: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(la), Fraction(0))

    def in_basis(self, tag: str) -> "SymFunc":
        """The same symmetric function with its terms expressed in another basis."""
        if tag == self._basis:
            return self
        if tag == "h":
            return SymFunc(self.h_terms, "h")
        return SymFunc(convert_terms(self.h_terms, "h", tag), tag)

    def sorted_terms(self) -> List[Tuple[Partition, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: order_key(item[0]))

    def max_degree(self) -> int:
        return max((sum(la) for la in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        terms = self.h_terms
        for la, c in other.h_terms.items():
            terms[la] = terms.get(la, Fraction(0)) + c
        return SymFunc(terms, "h")

    def __neg__(self) -> "SymFunc":
        return SymFunc({la: -c for la, c in self._terms.items()}, self._basis)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["SymFunc", Scalar]) -> "SymFunc":
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return SymFunc({la: c * other for la, c in self._terms.items()}, self._basis)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Scalar) -> "SymFunc":
        return SymFunc({la: c / Fraction(other) for la, c in self._terms.items()}, self._basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.h_terms == other.h_terms

    def __hash__(self) -> int:
        return hash(frozenset(self.h_terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for la, c in self.sorted_terms():
            name = f"{self._basis}{list(la)}" if la else "1"
            pieces.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(pieces)


def basis_element(tag: str, la: Iterable[int]) -> SymFunc:
    return SymFunc({tuple(la): 1}, tag)


def h(*parts: int) -> SymFunc:
    return basis_element("h", sort_partition(parts))


def e(*parts: int) -> SymFunc:
    return basis_element("e", sort_partition(parts))


def p(*parts: int) -> SymFunc:
    return basis_element("p", sort_partition(parts))


def m(*parts: int) -> SymFunc:
    return basis_element("m", sort_partition(parts))


def s(*parts: int) -> SymFunc:
    return basis_element("s", make_partition(parts))


ONE = SymFunc({(): 1})


def from_basis(tag: str, terms: Mapping[Iterable[int], Scalar]) -> SymFunc:
    """Build a symmetric function from coefficients in a named basis."""
    return SymFunc(terms, tag)


def to_basis(f: SymFunc, tag: str) -> Tuple[Terms, bool]:
    """
    Expand f in a basis

    Returns:
        Tuple[Terms, bool]: (coefficients, True iff every coefficient is an integer)
    """
    converted = f.in_basis(_check_basis(tag))
    return converted.terms, converted.is_integral()


# ---------------------------------------------------------------------------
# Ring and Hopf structure
# ---------------------------------------------------------------------------

def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """h_la * h_mu = h_(la union mu), extended bilinearly."""
    return SymFunc(_mult_product(f.h_terms, g.h_terms), "h")


class TensorSymFunc:
    """Element of Sym (x) Sym with both legs in the h basis"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[Partition, Partition], Scalar]] = None):
        result: Dict[Tuple[Partition, Partition], Fraction] = {}
        for (left, right), c in (terms or {}).items():
            key = (tuple(left), tuple(right))
            result[key] = result.get(key, Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in result.items() if v}

    @property
    def terms(self) -> Dict[Tuple[Partition, Partition], Fraction]:
        return dict(self._terms)

    def __add__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        terms = self.terms
        for key, c in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return TensorSymFunc(terms)

    def __sub__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        return self + TensorSymFunc({key: -c for key, c in other._terms.items()})

    def __mul__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        """Componentwise product in Sym (x) Sym."""
        result: Dict[Tuple[Partition, Partition], Fraction] = {}
        for (a, b), c in self._terms.items():
            for (x, y), d in other._terms.items():
                key = (sort_partition(a + x), sort_partition(b + y))
                result[key] = result.get(key, Fraction(0)) + c * d
        return TensorSymFunc(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorSymFunc):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return " + ".join(f"{c}*h{list(a)}(x)h{list(b)}" for (a, b), c in sorted(self._terms.items())) or "0"

    def map_legs(self, fn: Callable[[SymFunc], SymFunc],
                 fn_right: Optional[Callable[[SymFunc], SymFunc]] = None) -> "TensorSymFunc":
        """Apply linear maps to each tensor leg: (fn (x) fn_right)."""
        fn_right = fn_right or fn
        result = TensorSymFunc()
        for (a, b), c in self._terms.items():
            result = result + tensor(fn(basis_element("h", a)) * c, fn_right(basis_element("h", b)))
        return result

    def collapse_left(self) -> SymFunc:
        """(counit (x) id): keep terms whose left leg is the unit."""
        return SymFunc({b: c for (a, b), c in self._terms.items() if not a}, "h")

    def collapse_right(self) -> SymFunc:
        """(id (x) counit): keep terms whose right leg is the unit."""
        return SymFunc({a: c for (a, b), c in self._terms.items() if not b}, "h")

    def flip(self) -> "TensorSymFunc":
        return TensorSymFunc({(b, a): c for (a, b), c in self._terms.items()})


def tensor(f: SymFunc, g: SymFunc) -> TensorSymFunc:
    return TensorSymFunc({(a, b): c * d for a, c in f.h_terms.items() for b, d in g.h_terms.items()})


@lru_cache(maxsize=None)
def _coproduct_h(la: Partition) -> Tuple[Tuple[Tuple[Partition, Partition], Fraction], ...]:
    current: Dict[Tuple[Partition, Partition], Fraction] = {((), ()): Fraction(1)}
    for part in la:
        grown: Dict[Tuple[Partition, Partition], Fraction] = {}
        for (left, right), c in current.items():
            for j in range(part + 1):
                key = (sort_partition(left + (j,)), sort_partition(right + (part - j,)))
                grown[key] = grown.get(key, Fraction(0)) + c
        current = grown
    return tuple(current.items())


def coproduct(f: SymFunc) -> TensorSymFunc:
    """Delta(h_i) = sum_j h_j (x) h_(i-j), extended as an algebra morphism."""
    result: Dict[Tuple[Partition, Partition], Fraction] = {}
    for la, c in f.h_terms.items():
        for key, d in _coproduct_h(la):
            result[key] = result.get(key, Fraction(0)) + c * d
    return TensorSymFunc(result)


def counit(f: SymFunc) -> Fraction:
    return f.h_terms.get((), Fraction(0))


def omega(f: SymFunc) -> SymFunc:
    """The involution sending h_i to e_i."""
    return SymFunc(f.h_terms, "e").in_basis("h")


def antipode(f: SymFunc) -> SymFunc:
    """S(h_la) = (-1)^|la| e_la."""
    return SymFunc({la: (-1) ** sum(la) * c for la, c in f.h_terms.items()}, "e").in_basis("h")


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """<p_la, p_mu> = delta z_la."""
    a = f.in_basis("p").terms
    b = g.in_basis("p").terms
    return sum((c * b[la] * z_factor(la) for la, c in a.items() if la in b), Fraction(0))


def character_chi(f: SymFunc) -> Fraction:
    """chi_Sym(h_i) = 1, i.e. evaluation at (1, 0, 0, ...)."""
    return sum(f.h_terms.values(), Fraction(0))


def primitive_basis(degree: int) -> List[SymFunc]:
    """
    Basis of the primitive elements of one degree

    Computed as the exact left null space of f -> Delta(f) - f(x)1 - 1(x)f on the
    h basis of that degree.
    """
    if degree <= 0:
        raise PartitionError(f"primitive elements live in positive degree, got {degree}")
    basis = partitions_of(degree)
    reduced = []
    columns: Dict[Tuple[Partition, Partition], int] = {}
    for la in basis:
        row = {key: c for key, c in _coproduct_h(la) if key[0] and key[1]}
        for key in row:
            columns.setdefault(key, len(columns))
        reduced.append(row)
    A = zero_matrix(len(basis), len(columns))
    for i, row in enumerate(reduced):
        for key, c in row.items():
            A[i, columns[key]] = c
    if not columns:
        vectors = [np.array([Fraction(i == j) for j in range(len(basis))], dtype=object) for i in range(len(basis))]
    else:
        vectors = left_null_space(A)
    return [SymFunc({la: v[i] for i, la in enumerate(basis)}, "h") for v in vectors]


def subalgebra_rank(generator_degrees: Iterable[int], degree: int) -> int:
    """
    Graded rank of a free polynomial algebra

    Args:
        generator_degrees: Degree of each generator (repeats are distinct generators)
        degree: Degree to count

    Returns:
        int: Number of multisets of generators of total degree `degree`
    """
    generators = list(generator_degrees)
    if any(g <= 0 for g in generators):
        raise PartitionError(f"generator degrees must be positive: {generators}")
    if degree < 0:
        return 0
    counts = [1] + [0] * degree
    for g in generators:
        for d in range(g, degree + 1):
            counts[d] += counts[d - g]
    return counts[degree]


__all__ = [
    "SymFunc", "TensorSymFunc", "TransitionCache", "TRANSITIONS", "ONE",
    "h", "e", "p", "m", "s", "basis_element", "from_basis", "to_basis", "convert_terms",
    "multiply", "coproduct", "tensor", "counit", "omega", "antipode", "hall_inner",
    "character_chi", "primitive_basis", "subalgebra_rank", "z_factor",
]
