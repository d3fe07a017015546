#!/usr/bin/env python3
"""
Tests for Hopf presentations, the canonical morphism into QSym and the gallery
"""

import sys
from fractions import Fraction
from math import comb

import pytest

from core.errors import NotSymmetricError, PresentationError
from core.hopf import (
    HopfPresentation, QSymFunc, binomial_presentation, canonical_morphism, check_character_preservation,
    gallery, lambda_k_presentation, morphism_is_multiplicative, presentation_from_dict, presentation_to_dict,
    qsym_character, qsym_multiply, qsym_to_sym, sym_presentation, validate, zeta_alpha,
)
from core.kschur import kschur_in_h
from core.partitions import partitions_of
from core.symfunc import basis_element, h, p


def _binomial_tables(max_degree):
    basis = {d: ["1" if d == 0 else ("x" if d == 1 else f"x^{d}")] for d in range(max_degree + 1)}
    products = {((a, 0), (b, 0)): {(a + b, 0): 1}
                for a in range(1, max_degree + 1) for b in range(1, max_degree + 1 - a)}
    coproducts = {(n, 0): {((j, 0), (n - j, 0)): comb(n, j) for j in range(n + 1)} for n in range(max_degree + 1)}
    character = {(n, 0): 1 for n in range(max_degree + 1)}
    return basis, products, coproducts, character


@pytest.mark.parametrize("build", [
    lambda: sym_presentation(4),
    lambda: binomial_presentation(5),
    lambda: lambda_k_presentation(2, 4),
])
def test_gallery_presentations_are_valid(build):
    report = validate(build())
    assert report["valid"]
    assert report["cocommutative"]


def test_sym_labels():
    hp = sym_presentation(2)
    assert hp.basis == {0: ["1"], 1: ["h[1]"], 2: ["h[2]", "h[1, 1]"]}
    assert hp.element("h[1, 1]") == {(2, 1): 1}


def test_broken_coproduct_is_reported():
    basis, products, coproducts, character = _binomial_tables(3)
    coproducts[(3, 0)][((1, 0), (2, 0))] = 4
    report = validate(HopfPresentation(3, basis, products, coproducts, character))
    assert not report["coassociative"]
    assert not report["valid"]


def test_incompatible_coproduct_is_reported():
    basis, products, coproducts, character = _binomial_tables(2)
    coproducts[(2, 0)][((1, 0), (1, 0))] = 3
    report = validate(HopfPresentation(2, basis, products, coproducts, character))
    assert report["coassociative"]
    assert not report["bialgebra_compatible"]
    assert not report["valid"]


def test_antipode_of_binomial():
    S = binomial_presentation(3).antipode()
    assert S[(1, 0)] == {(1, 0): -1}
    assert S[(2, 0)] == {(2, 0): 1}
    assert S[(3, 0)] == {(3, 0): -1}


def test_malformed_presentations():
    basis, products, coproducts, character = _binomial_tables(2)
    with pytest.raises(PresentationError):
        HopfPresentation(2, basis, {((1, 0), (1, 0)): {(1, 0): 1}}, coproducts, character)
    with pytest.raises(PresentationError):
        HopfPresentation(2, {0: ["1", "u"]}, {}, {}, {})
    with pytest.raises(PresentationError):
        presentation_from_dict({"basis": {"0": ["1"]}})
    with pytest.raises(PresentationError):
        gallery("nope", 3)
    with pytest.raises(PresentationError):
        binomial_presentation(2).element("y")


def test_unit_rows_must_act_as_identity():
    data = presentation_to_dict(binomial_presentation(3))
    data["product"].append([0, 0, 1, 0, 1, 0, 5, 1])
    with pytest.raises(PresentationError):
        presentation_from_dict(data)

    data = presentation_to_dict(binomial_presentation(3))
    data["product"].append([1, 0, 0, 0, 1, 0, 1, 1])
    assert validate(presentation_from_dict(data))["valid"]

    basis, products, coproducts, character = _binomial_tables(2)
    products[((2, 0), (0, 0))] = {}
    with pytest.raises(PresentationError):
        HopfPresentation(2, basis, products, coproducts, character)


def test_quasi_shuffle_and_character():
    m1 = QSymFunc({(1,): 1})
    assert qsym_multiply(m1, m1) == QSymFunc({(1, 1): 2, (2,): 1})
    assert qsym_character(QSymFunc({(2,): 1, (1, 1): 3, (): 2})) == 3


def test_zeta_examples():
    hp = sym_presentation(3)
    assert zeta_alpha(hp, "h[2]", (1, 1)) == 1
    assert zeta_alpha(hp, "h[2]", (2,)) == 1
    assert zeta_alpha(hp, "h[1, 1]", (1, 1)) == 2
    with pytest.raises(PresentationError):
        zeta_alpha(hp, "h[2]", (1,))


def test_binomial_morphism_counts_multinomials():
    hp = binomial_presentation(3)
    assert canonical_morphism(hp, "x^3") == QSymFunc({(3,): 1, (2, 1): 3, (1, 2): 3, (1, 1, 1): 6})
    assert qsym_to_sym(canonical_morphism(hp, "x^3")) == p(1, 1, 1)
    assert canonical_morphism(hp, "1") == QSymFunc({(): 1})


def test_sym_morphism_is_identity():
    hp = sym_presentation(4)
    for d in range(5):
        for i, la in enumerate(partitions_of(d)):
            assert qsym_to_sym(canonical_morphism(hp, {(d, i): 1})) == basis_element("h", la)
    assert qsym_to_sym(canonical_morphism(hp, "h[2, 1]")) == h(2, 1)


def test_qsym_to_sym_names_witness():
    with pytest.raises(NotSymmetricError) as info:
        qsym_to_sym(QSymFunc({(1, 2): 1}))
    assert info.value.witness == ((1, 2), (2, 1))
    assert info.value.to_dict()["witness"] == [[1, 2], [2, 1]]


def test_corrupted_character_is_caught_on_products():
    basis, products, coproducts, character = _binomial_tables(3)
    character[(2, 0)] = 5
    hp = HopfPresentation(3, basis, products, coproducts, character)
    result = check_character_preservation(hp, ["x", "x^2"])
    assert not result["preserved"]
    failing = [item["element"] for item in result["items"] if not item["preserved"]]
    assert failing[0] == "x*x"
    assert "x" not in failing and "x^2" not in failing
    assert not validate(hp)["character_multiplicative"]


def test_character_preserved_for_gallery():
    for hp in (sym_presentation(3), binomial_presentation(3), lambda_k_presentation(2, 3)):
        samples = [hp.label(key) for key in hp.all_keys() if 0 < key[0] <= 2]
        assert check_character_preservation(hp, samples)["preserved"]
        assert morphism_is_multiplicative(hp)


def test_lambda_k_morphism_is_the_inclusion():
    hp = lambda_k_presentation(2, 4)
    assert hp.label((3, 0)) == "s2[2, 1]"
    for d in range(5):
        for i, la in enumerate(partitions_of(d, max_part=2)):
            assert qsym_to_sym(canonical_morphism(hp, {(d, i): 1})) == kschur_in_h(2, la)


def test_presentation_file_format():
    hp = binomial_presentation(3)
    data = presentation_to_dict(hp)
    assert data["basis"] == {"0": ["1"], "1": ["x"], "2": ["x^2"], "3": ["x^3"]}
    assert [2, 0, 1, 0, 1, 0, 2, 1] in data["coproduct"]
    assert data["character"]["x^2"] == [1, 1]
    parsed = presentation_from_dict(data, name="copy")
    assert parsed.name == "copy"
    assert canonical_morphism(parsed, "x^2") == canonical_morphism(hp, "x^2")
    assert canonical_morphism(parsed, "x^2").coefficient((1, 1)) == Fraction(2)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
