"""
Hopf Module for SchurPos
Finitely presented graded connected Hopf algebras with a character, the canonical
morphism into quasisymmetric functions, and a small gallery of presentations
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import NotSymmetricError, PresentationError
from .kschur import kschur_coproduct, kschur_in_h, kschur_product
from .partitions import (
    Composition, Partition, compositions_of, make_composition, partitions_of, rearrangements, sort_partition,
)
from .symfunc import SymFunc, basis_element, character_chi, coproduct, multiply

Key = Tuple[int, int]
Element = Dict[Key, Fraction]
Tensor = Dict[Tuple[Key, Key], Fraction]

UNIT: Key = (0, 0)


def _accumulate(target: Dict, key: Any, value: Fraction) -> None:
    total = target.get(key, Fraction(0)) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class HopfPresentation:
    """
    A graded connected Hopf algebra truncated at max_degree, with a character

    Basis elements are addressed by (degree, index) keys; degree 0 holds only the
    unit. Products by the unit and the coproduct of the unit are implied, and a unit
    row given anyway must read 1*x = x. All other structure constants come from the
    tables. Products landing above max_degree are truncated.
    """

    def __init__(self, max_degree: int, basis: Mapping[int, Sequence[str]],
                 product: Mapping[Tuple[Key, Key], Mapping[Key, Any]],
                 coproduct: Mapping[Key, Mapping[Tuple[Key, Key], Any]],
                 character: Mapping[Key, Any], name: str = "presentation"):
        self.name = name
        self.max_degree = max_degree
        self.basis: Dict[int, List[str]] = {d: list(basis.get(d, [])) for d in range(max_degree + 1)}
        extra = [d for d in basis if d < 0 or d > max_degree]
        if extra:
            raise PresentationError(f"basis degrees {extra} lie outside 0..{max_degree}")
        if len(self.basis[0]) != 1:
            raise PresentationError(f"degree 0 must hold exactly the unit, got {self.basis[0]}")
        labels = [label for d in range(max_degree + 1) for label in self.basis[d]]
        if len(set(labels)) != len(labels):
            raise PresentationError("basis labels must be unique")
        self.keys: Dict[str, Key] = {
            label: (d, i) for d in range(max_degree + 1) for i, label in enumerate(self.basis[d])
        }

        self.product: Dict[Tuple[Key, Key], Element] = {}
        for (a, b), image in product.items():
            self._check_key(a)
            self._check_key(b)
            for c, value in image.items():
                self._check_key(c)
                if c[0] != a[0] + b[0]:
                    raise PresentationError(
                        f"product {self.label(a)}*{self.label(b)} has a term {self.label(c)} of degree {c[0]}"
                    )
                if value:
                    self.product.setdefault((a, b), {})[c] = Fraction(value)
            if UNIT in (a, b):
                other = b if a == UNIT else a
                if self.product.get((a, b), {}) != {other: Fraction(1)}:
                    raise PresentationError(
                        f"unit row {self.label(a)}*{self.label(b)} must equal {self.label(other)}"
                    )

        self.coproduct: Dict[Key, Tensor] = {}
        for a, image in coproduct.items():
            self._check_key(a)
            for (left, right), value in image.items():
                self._check_key(left)
                self._check_key(right)
                if left[0] + right[0] != a[0]:
                    raise PresentationError(
                        f"coproduct of {self.label(a)} has a term {self.label(left)}(x){self.label(right)} of the wrong degree"
                    )
                if value:
                    self.coproduct.setdefault(a, {})[(left, right)] = Fraction(value)
        self.coproduct.setdefault(UNIT, {(UNIT, UNIT): Fraction(1)})

        self.character: Dict[Key, Fraction] = {}
        for a, value in character.items():
            self._check_key(a)
            self.character[a] = Fraction(value)

    def _check_key(self, key: Key) -> None:
        d, i = key
        if d not in self.basis or not 0 <= i < len(self.basis[d]):
            raise PresentationError(f"no basis element ({d}, {i}) in {self.name}")

    def label(self, key: Key) -> str:
        return self.basis[key[0]][key[1]]

    def all_keys(self) -> List[Key]:
        return [(d, i) for d in range(self.max_degree + 1) for i in range(len(self.basis[d]))]

    def element(self, label: str) -> Element:
        if label not in self.keys:
            raise PresentationError(f"unknown basis label {label!r} in {self.name}")
        return {self.keys[label]: Fraction(1)}

    # -- structure maps on elements --------------------------------------

    def multiply_keys(self, a: Key, b: Key) -> Element:
        if a == UNIT:
            return {b: Fraction(1)}
        if b == UNIT:
            return {a: Fraction(1)}
        if a[0] + b[0] > self.max_degree:
            return {}
        return dict(self.product.get((a, b), {}))

    def multiply(self, x: Element, y: Element) -> Element:
        result: Element = {}
        for a, c in x.items():
            for b, d in y.items():
                for key, value in self.multiply_keys(a, b).items():
                    _accumulate(result, key, c * d * value)
        return result

    def comultiply(self, x: Element) -> Tensor:
        result: Tensor = {}
        for a, c in x.items():
            for pair, value in self.coproduct.get(a, {}).items():
                _accumulate(result, pair, c * value)
        return result

    def counit(self, x: Element) -> Fraction:
        return x.get(UNIT, Fraction(0))

    def chi(self, x: Element) -> Fraction:
        return sum((c * self.character.get(a, Fraction(0)) for a, c in x.items()), Fraction(0))

    def degree_of(self, x: Element) -> Optional[int]:
        degrees = {a[0] for a in x}
        return degrees.pop() if len(degrees) == 1 else None

    def antipode(self) -> Dict[Key, Element]:
        """S(1) = 1 and S(x) = -sum S(x') x'' over the terms of Delta(x) with deg x' < deg x."""
        S: Dict[Key, Element] = {UNIT: {UNIT: Fraction(1)}}
        for a in self.all_keys():
            if a == UNIT:
                continue
            image: Element = {}
            for (left, right), c in self.coproduct.get(a, {}).items():
                if left[0] == a[0]:
                    continue
                for key, value in self.multiply(S[left], {right: Fraction(1)}).items():
                    _accumulate(image, key, -c * value)
            S[a] = image
        return S


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------

def _triples_left(hp: HopfPresentation, a: Key) -> Dict[Tuple[Key, Key, Key], Fraction]:
    result: Dict[Tuple[Key, Key, Key], Fraction] = {}
    for (x, y), c in hp.coproduct.get(a, {}).items():
        for (x1, x2), d in hp.coproduct.get(x, {}).items():
            _accumulate(result, (x1, x2, y), c * d)
    return result


def _triples_right(hp: HopfPresentation, a: Key) -> Dict[Tuple[Key, Key, Key], Fraction]:
    result: Dict[Tuple[Key, Key, Key], Fraction] = {}
    for (x, y), c in hp.coproduct.get(a, {}).items():
        for (y1, y2), d in hp.coproduct.get(y, {}).items():
            _accumulate(result, (x, y1, y2), c * d)
    return result


def _tensor_product(hp: HopfPresentation, s: Tensor, t: Tensor) -> Tensor:
    result: Tensor = {}
    for (a1, a2), c in s.items():
        for (b1, b2), d in t.items():
            left = hp.multiply_keys(a1, b1)
            right = hp.multiply_keys(a2, b2)
            for x, u in left.items():
                for y, v in right.items():
                    _accumulate(result, (x, y), c * d * u * v)
    return result


def validate(hp: HopfPresentation) -> Dict[str, bool]:
    """
    Check the Hopf algebra axioms degreewise up to max_degree

    Args:
        hp: Presentation to check

    Returns:
        Dict[str, bool]: One flag per axiom plus "valid" (all axioms except cocommutativity)
    """
    keys = hp.all_keys()
    pairs = [(a, b) for a in keys for b in keys if a[0] + b[0] <= hp.max_degree]

    associative = all(
        hp.multiply(hp.multiply({a: 1}, {b: 1}), {c: 1}) == hp.multiply({a: 1}, hp.multiply({b: 1}, {c: 1}))
        for a, b in pairs for c in keys if a[0] + b[0] + c[0] <= hp.max_degree
    )
    coassociative = all(_triples_left(hp, a) == _triples_right(hp, a) for a in keys)

    counital = True
    for a in keys:
        delta = hp.coproduct.get(a, {})
        left: Element = {}
        right: Element = {}
        for (x, y), c in delta.items():
            if x == UNIT:
                _accumulate(left, y, c)
            if y == UNIT:
                _accumulate(right, x, c)
        if left != {a: 1} or right != {a: 1}:
            counital = False
            break

    bialgebra_compatible = all(
        hp.comultiply(hp.multiply({a: 1}, {b: 1})) == _tensor_product(hp, hp.comultiply({a: 1}), hp.comultiply({b: 1}))
        for a, b in pairs
    )
    cocommutative = all(
        {(y, x): c for (x, y), c in hp.coproduct.get(a, {}).items()} == hp.coproduct.get(a, {})
        for a in keys
    )
    connected = len(hp.basis[0]) == 1 and hp.chi({UNIT: Fraction(1)}) == 1
    character_multiplicative = hp.chi({UNIT: Fraction(1)}) == 1 and all(
        hp.chi(hp.multiply({a: 1}, {b: 1})) == hp.chi({a: 1}) * hp.chi({b: 1}) for a, b in pairs
    )

    antipode_ok = True
    if counital and coassociative:
        S = hp.antipode()
        for a in keys:
            expected = {UNIT: Fraction(1)} if a == UNIT else {}
            left_side: Element = {}
            right_side: Element = {}
            for (x, y), c in hp.coproduct.get(a, {}).items():
                for key, value in hp.multiply(S[x], {y: Fraction(1)}).items():
                    _accumulate(left_side, key, c * value)
                for key, value in hp.multiply({x: Fraction(1)}, S[y]).items():
                    _accumulate(right_side, key, c * value)
            if left_side != expected or right_side != expected:
                antipode_ok = False
                break
    else:
        antipode_ok = False

    report = {
        "associative": associative,
        "coassociative": coassociative,
        "counital": counital,
        "bialgebra_compatible": bialgebra_compatible,
        "cocommutative": cocommutative,
        "connected": connected,
        "character_multiplicative": character_multiplicative,
        "antipode": antipode_ok,
    }
    report["valid"] = all(v for k, v in report.items() if k != "cocommutative")
    return report


# ---------------------------------------------------------------------------
# Quasisymmetric functions and the canonical morphism
# ---------------------------------------------------------------------------

class QSymFunc:
    """Finitely supported combination of monomial quasisymmetric functions M_alpha"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Iterable[int], Any]] = None):
        result: Dict[Composition, Fraction] = {}
        for alpha, c in (terms or {}).items():
            _accumulate(result, make_composition(alpha), Fraction(c))
        self._terms = result

    @property
    def terms(self) -> Dict[Composition, Fraction]:
        return dict(self._terms)

    def coefficient(self, alpha: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Composition, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), len(item[0]), item[0]))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def __add__(self, other: "QSymFunc") -> "QSymFunc":
        terms = self.terms
        for alpha, c in other._terms.items():
            _accumulate(terms, alpha, c)
        return QSymFunc(terms)

    def __mul__(self, other: Union["QSymFunc", int, Fraction]) -> "QSymFunc":
        if isinstance(other, QSymFunc):
            return qsym_multiply(self, other)
        return QSymFunc({alpha: c * other for alpha, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymFunc):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return " + ".join(f"{c}*M{list(alpha)}" for alpha, c in self.sorted_terms()) or "0"


@lru_cache(maxsize=None)
def _quasi_shuffle(alpha: Composition, beta: Composition) -> Tuple[Tuple[Composition, int], ...]:
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    result: Dict[Composition, int] = {}
    for rest, c in _quasi_shuffle(alpha[1:], beta):
        result[(alpha[0],) + rest] = result.get((alpha[0],) + rest, 0) + c
    for rest, c in _quasi_shuffle(alpha, beta[1:]):
        result[(beta[0],) + rest] = result.get((beta[0],) + rest, 0) + c
    for rest, c in _quasi_shuffle(alpha[1:], beta[1:]):
        key = (alpha[0] + beta[0],) + rest
        result[key] = result.get(key, 0) + c
    return tuple(result.items())


def qsym_multiply(f: QSymFunc, g: QSymFunc) -> QSymFunc:
    """Quasi-shuffle product M_alpha M_beta."""
    result: Dict[Composition, Fraction] = {}
    for alpha, c in f.terms.items():
        for beta, d in g.terms.items():
            for gamma, n in _quasi_shuffle(alpha, beta):
                _accumulate(result, gamma, c * d * n)
    return QSymFunc(result)


def qsym_character(f: QSymFunc) -> Fraction:
    """Evaluation at (1, 0, 0, ...): M_() and M_(n) go to 1, longer M_alpha to 0."""
    return sum((c for alpha, c in f.terms.items() if len(alpha) <= 1), Fraction(0))


def _as_element(hp: HopfPresentation, h: Union[str, Element]) -> Element:
    return hp.element(h) if isinstance(h, str) else {k: Fraction(v) for k, v in h.items() if v}


def zeta_alpha(hp: HopfPresentation, h: Union[str, Element], alpha: Sequence[int]) -> Fraction:
    """
    Character component of h along the composition alpha

    Applies the left-nested iterated coproduct, keeps the multidegree-alpha component and
    evaluates the character on every tensor leg.

    Args:
        hp: Presentation
        h: Homogeneous element (or basis label) of degree |alpha|
        alpha: Composition

    Returns:
        Fraction: zeta_alpha(h)
    """
    x = _as_element(hp, h)
    alpha = make_composition(alpha)
    degree = hp.degree_of(x)
    if x and degree != sum(alpha):
        raise PresentationError(f"element of degree {degree} paired with composition {list(alpha)}")
    return _zeta(hp, x, alpha)


def _zeta(hp: HopfPresentation, x: Element, alpha: Composition) -> Fraction:
    if not alpha:
        return hp.counit(x)
    if len(alpha) == 1:
        return sum((c * hp.character.get(a, Fraction(0)) for a, c in x.items() if a[0] == alpha[0]), Fraction(0))
    head, last = alpha[:-1], alpha[-1]
    total = Fraction(0)
    for (left, right), c in hp.comultiply(x).items():
        if right[0] != last or left[0] != sum(head):
            continue
        chi_right = hp.character.get(right, Fraction(0))
        if chi_right:
            total += c * chi_right * _zeta(hp, {left: Fraction(1)}, head)
    return total


def canonical_morphism(hp: HopfPresentation, h: Union[str, Element]) -> QSymFunc:
    """Psi(h) = sum over compositions alpha of zeta_alpha(h) M_alpha, degree by degree."""
    x = _as_element(hp, h)
    by_degree: Dict[int, Element] = {}
    for a, c in x.items():
        by_degree.setdefault(a[0], {})[a] = c
    terms: Dict[Composition, Fraction] = {}
    for degree, part in by_degree.items():
        for alpha in compositions_of(degree):
            value = _zeta(hp, part, alpha)
            if value:
                terms[alpha] = terms.get(alpha, Fraction(0)) + value
    return QSymFunc(terms)


def qsym_to_sym(f: QSymFunc) -> SymFunc:
    """
    Read a quasisymmetric function as a symmetric one in the m basis

    Raises NotSymmetricError with a witness pair of compositions when the coefficients
    are not constant on rearrangement classes.
    """
    terms = f.terms
    result: Dict[Partition, Fraction] = {}
    for alpha in sorted(terms, key=lambda a: (sum(a), len(a), a)):
        for beta in rearrangements(alpha):
            if terms.get(beta, Fraction(0)) != terms[alpha]:
                raise NotSymmetricError(
                    f"M{list(alpha)} and M{list(beta)} have different coefficients", (alpha, beta)
                )
        result[sort_partition(alpha)] = terms[alpha]
    return SymFunc(result, "m")


def check_character_preservation(hp: HopfPresentation, samples: Sequence[Union[str, Element]]) -> Dict[str, Any]:
    """
    Compare chi with the QSym character along the canonical morphism

    Each sample h is checked directly, and each pair of samples is checked through the
    product: chi_Q(Psi(a) Psi(b)) must equal chi(ab).
    """
    elements = [_as_element(hp, h) for h in samples]
    names = [h if isinstance(h, str) else repr(h) for h in samples]
    images = [canonical_morphism(hp, x) for x in elements]
    items = []
    for name, x, image in zip(names, elements, images):
        source = hp.chi(x)
        target = qsym_character(image)
        items.append({"element": name, "source": source, "target": target, "preserved": source == target})
    for i in range(len(elements)):
        for j in range(i, len(elements)):
            product = hp.multiply(elements[i], elements[j])
            if any(a[0] + b[0] > hp.max_degree for a in elements[i] for b in elements[j]):
                continue
            source = hp.chi(product)
            target = qsym_character(qsym_multiply(images[i], images[j]))
            items.append({
                "element": f"{names[i]}*{names[j]}",
                "source": source,
                "target": target,
                "preserved": source == target,
            })
    violations = sum(1 for item in items if not item["preserved"])
    return {"preserved": violations == 0, "violations": violations, "items": items}


def morphism_is_multiplicative(hp: HopfPresentation) -> bool:
    """Psi(ab) = Psi(a) Psi(b) for all basis pairs within max_degree."""
    keys = hp.all_keys()
    for a in keys:
        for b in keys:
            if a[0] + b[0] > hp.max_degree:
                continue
            lhs = canonical_morphism(hp, hp.multiply({a: 1}, {b: 1}))
            rhs = qsym_multiply(canonical_morphism(hp, {a: 1}), canonical_morphism(hp, {b: 1}))
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# Gallery
# ---------------------------------------------------------------------------

def _h_label(la: Partition) -> str:
    return f"h{list(la)}" if la else "1"


def sym_presentation(max_degree: int) -> HopfPresentation:
    """Sym truncated at max_degree on the h basis with chi(h_la) = 1."""
    basis = {d: [_h_label(la) for la in partitions_of(d)] for d in range(max_degree + 1)}
    index = {la: (sum(la), i) for d in range(max_degree + 1) for i, la in enumerate(partitions_of(d))}
    products: Dict[Tuple[Key, Key], Dict[Key, Fraction]] = {}
    coproducts: Dict[Key, Dict[Tuple[Key, Key], Fraction]] = {}
    for la, a in index.items():
        h_la = basis_element("h", la)
        coproducts[a] = {(index[left], index[right]): c for (left, right), c in coproduct(h_la).terms.items()}
        for mu, b in index.items():
            if la and mu and a[0] + b[0] <= max_degree:
                image = multiply(h_la, basis_element("h", mu)).terms
                products[(a, b)] = {index[nu]: c for nu, c in image.items()}
    character = {a: Fraction(1) for a in index.values()}
    return HopfPresentation(max_degree, basis, products, coproducts, character, name="sym")


def binomial_presentation(max_degree: int) -> HopfPresentation:
    """Polynomials in one primitive x: x^a x^b = x^(a+b), chi(x^n) = 1."""
    basis = {d: ["1" if d == 0 else ("x" if d == 1 else f"x^{d}")] for d in range(max_degree + 1)}
    products = {((a, 0), (b, 0)): {(a + b, 0): 1}
                for a in range(1, max_degree + 1) for b in range(1, max_degree + 1 - a)}
    coproducts = {(n, 0): {((j, 0), (n - j, 0)): comb(n, j) for j in range(n + 1)} for n in range(max_degree + 1)}
    character = {(n, 0): 1 for n in range(max_degree + 1)}
    return HopfPresentation(max_degree, basis, products, coproducts, character, name="binomial")


def lambda_k_presentation(k: int, max_degree: int) -> HopfPresentation:
    """Lambda_(k) on the k-Schur basis with the character restricted from Sym."""
    def label(la: Partition) -> str:
        return f"s{k}{list(la)}" if la else "1"

    bounded = {d: partitions_of(d, max_part=k) for d in range(max_degree + 1)}
    basis = {d: [label(la) for la in bounded[d]] for d in bounded}
    index = {la: (d, i) for d in bounded for i, la in enumerate(bounded[d])}
    products: Dict[Tuple[Key, Key], Dict[Key, Fraction]] = {}
    coproducts: Dict[Key, Dict[Tuple[Key, Key], Fraction]] = {}
    for la, a in index.items():
        coproducts[a] = {(index[left], index[right]): c for (left, right), c in kschur_coproduct(k, la).items()}
        for mu, b in index.items():
            if la and mu and a[0] + b[0] <= max_degree:
                products[(a, b)] = {index[nu]: c for nu, c in kschur_product(k, la, mu).items()}
    character = {a: character_chi(kschur_in_h(k, la)) for la, a in index.items()}
    return HopfPresentation(max_degree, basis, products, coproducts, character, name=f"lambda-{k}")


def gallery(name: str, max_degree: int, k: int = 2) -> HopfPresentation:
    if name == "sym":
        return sym_presentation(max_degree)
    if name == "binomial":
        return binomial_presentation(max_degree)
    if name == "lambda-k":
        return lambda_k_presentation(k, max_degree)
    raise PresentationError(f"unknown gallery presentation {name!r}")


GALLERY = ("sym", "binomial", "lambda-k")


# ---------------------------------------------------------------------------
# Wire format
# ---------------------------------------------------------------------------

def presentation_to_dict(hp: HopfPresentation) -> Dict[str, Any]:
    """Serialize to the presentation file format with rows sorted by key."""
    product_rows = []
    for (a, b), image in sorted(hp.product.items()):
        for c, value in sorted(image.items()):
            product_rows.append([a[0], a[1], b[0], b[1], c[0], c[1], value.numerator, value.denominator])
    coproduct_rows = []
    for a, image in sorted(hp.coproduct.items()):
        for (left, right), value in sorted(image.items()):
            coproduct_rows.append([a[0], a[1], left[0], left[1], right[0], right[1], value.numerator, value.denominator])
    return {
        "max_degree": hp.max_degree,
        "basis": {str(d): list(labels) for d, labels in sorted(hp.basis.items())},
        "product": product_rows,
        "coproduct": coproduct_rows,
        "character": {hp.label(a): [v.numerator, v.denominator] for a, v in sorted(hp.character.items())},
    }


def presentation_from_dict(data: Mapping[str, Any], name: str = "presentation") -> HopfPresentation:
    """Parse the presentation file format, raising PresentationError on malformed input."""
    try:
        max_degree = int(data["max_degree"])
        basis = {int(d): [str(label) for label in labels] for d, labels in data["basis"].items()}
        products: Dict[Tuple[Key, Key], Dict[Key, Fraction]] = {}
        for row in data.get("product", []):
            da, i, db, j, dc, k, num, den = (int(v) for v in row)
            products.setdefault(((da, i), (db, j)), {})
            _accumulate(products[((da, i), (db, j))], (dc, k), Fraction(num, den))
        coproducts: Dict[Key, Dict[Tuple[Key, Key], Fraction]] = {}
        for row in data.get("coproduct", []):
            ds, i, dl, j, dr, k, num, den = (int(v) for v in row)
            coproducts.setdefault((ds, i), {})
            _accumulate(coproducts[(ds, i)], ((dl, j), (dr, k)), Fraction(num, den))
        labels = {label: (d, i) for d, names in basis.items() for i, label in enumerate(names)}
        character: Dict[Key, Fraction] = {}
        for label, (num, den) in data.get("character", {}).items():
            if label not in labels:
                raise PresentationError(f"character given for unknown label {label!r}")
            character[labels[label]] = Fraction(int(num), int(den))
    except PresentationError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError, AttributeError) as e:
        raise PresentationError(f"malformed presentation: {type(e).__name__}: {e}") from e
    return HopfPresentation(max_degree, basis, products, coproducts, character, name=name)
