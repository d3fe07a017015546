#!/usr/bin/env python3
"""
Tests for exact symmetric-function arithmetic: conversions, product, coproduct,
omega, antipode, the Hall pairing, chi_Sym and primitive elements
"""

import os
import sys
from fractions import Fraction
from itertools import product

import pytest

from core.errors import PartitionError
from core.linalg import is_identity
from core.partitions import partitions_of
from core.symfunc import (
    BASES, ONE, SymFunc, TransitionCache, antipode, basis_element, character_chi, coproduct, counit, e, h,
    hall_inner, m, omega, p, primitive_basis, s, subalgebra_rank, tensor, to_basis, z_factor,
)


def test_schur_in_h_is_jacobi_trudi():
    assert s(2, 1).in_basis("h").terms == {(2, 1): 1, (3,): -1}
    assert s(1, 1).in_basis("h").terms == {(1, 1): 1, (2,): -1}


def test_generator_conversions():
    assert e(2).in_basis("h").terms == {(1, 1): 1, (2,): -1}
    assert p(2).in_basis("h").terms == {(2,): 2, (1, 1): -1}
    assert h(2).in_basis("p").terms == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    assert h(2).in_basis("m").terms == {(2,): 1, (1, 1): 1}


def test_schur_in_monomials_counts_tableaux():
    assert s(2, 1).in_basis("m").terms == {(2, 1): 1, (1, 1, 1): 2}
    assert s(3).in_basis("m").terms == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}


def test_to_basis_reports_integrality():
    terms, integral = to_basis(p(2), "h")
    assert integral and terms == {(2,): 2, (1, 1): -1}
    _, integral = to_basis(h(2), "p")
    assert not integral


def test_unknown_basis_is_rejected():
    with pytest.raises(PartitionError):
        SymFunc({(1,): 1}, "q")
    with pytest.raises(PartitionError):
        SymFunc({(1, 2): 1}, "h")


def test_transition_matrices_compose_to_identity():
    cache = TransitionCache()
    for degree in range(1, 6):
        for a, b in product(BASES, BASES):
            assert is_identity(cache.get(degree, a, b).dot(cache.get(degree, b, a)))


def test_transition_cache_persists_to_disk(tmp_path):
    first = TransitionCache(str(tmp_path))
    M = first.get(3, "s", "m")
    assert os.path.exists(os.path.join(str(tmp_path), "transition_d3_s_m.json"))
    second = TransitionCache(str(tmp_path))
    assert (second.get(3, "s", "m") == M).all()


def test_multiply():
    assert s(1) * s(1) == s(2) + s(1, 1)
    assert h(1) * e(1) == p(1, 1)
    assert (ONE * s(2, 1)) == s(2, 1)
    assert (2 * h(1)).terms == {(1,): 2}


def test_equality_ignores_storage_basis():
    assert s(2, 1) == h(2, 1) - h(3)
    assert p(1) == m(1) == e(1) == s(1)
    assert s(2, 1).in_basis("p").basis == "p"


def test_coproduct_of_h():
    assert coproduct(h(2)).terms == {((2,), ()): 1, ((1,), (1,)): 1, ((), (2,)): 1}


def test_power_sums_are_primitive():
    for n in range(1, 6):
        assert coproduct(p(n)) == tensor(p(n), ONE) + tensor(ONE, p(n))


def test_coproduct_is_multiplicative():
    for i in range(1, 8):
        for j in range(1, 9 - i):
            assert coproduct(h(i) * h(j)) == coproduct(h(i)) * coproduct(h(j))
    assert coproduct(s(2, 1) * p(2)) == coproduct(s(2, 1)) * coproduct(p(2))
    assert coproduct(e(3) * s(2)) == coproduct(e(3)) * coproduct(s(2))


def test_counit():
    assert counit(ONE) == 1
    assert counit(h(2) + ONE * 3) == 3
    assert counit(s(2, 1)) == 0


def test_omega():
    assert omega(s(2, 1)) == s(2, 1)
    assert omega(s(3)) == s(1, 1, 1)
    assert omega(p(2)) == -p(2)
    assert omega(omega(s(3, 1))) == s(3, 1)


def test_antipode():
    assert antipode(p(2)) == -p(2)
    assert antipode(h(2)) == e(2)
    assert antipode(antipode(s(2, 1))) == s(2, 1)


def test_antipode_axiom():
    for n in range(1, 6):
        for la in partitions_of(n):
            total = SymFunc({}, "h")
            for (left, right), c in coproduct(basis_element("h", la)).terms.items():
                total = total + antipode(basis_element("h", left)) * basis_element("h", right) * c
            assert total.is_zero()


def test_coproduct_counit_and_omega():
    f = s(3, 1) + 2 * p(2)
    assert coproduct(f).collapse_left() == f
    assert coproduct(f).collapse_right() == f
    assert coproduct(omega(f)) == coproduct(f).map_legs(omega)
    assert coproduct(s(2, 1)).flip() == coproduct(s(2, 1))


def test_hall_inner_product():
    assert hall_inner(s(2, 1), s(2, 1)) == 1
    assert hall_inner(s(2, 1), s(3)) == 0
    assert hall_inner(h(2), m(2)) == 1
    assert hall_inner(h(2), m(1, 1)) == 0
    assert hall_inner(p(2, 1, 1), p(2, 1, 1)) == z_factor((2, 1, 1)) == 4


def test_omega_is_an_isometry():
    for degree in range(1, 7):
        shapes = partitions_of(degree)
        for la in shapes:
            f = basis_element("s", la)
            omega_f = omega(f)
            for mu in shapes:
                g = basis_element("h", mu)
                assert hall_inner(omega_f, omega(g)) == hall_inner(f, g)


def test_character_evaluates_at_one_variable():
    assert character_chi(h(3)) == 1
    assert character_chi(e(2)) == 0
    assert character_chi(p(3)) == 1
    assert character_chi(s(2, 1)) == 0
    assert character_chi(s(4)) == 1


def test_primitive_basis_is_one_power_sum_per_degree():
    for degree in range(1, 6):
        basis = primitive_basis(degree)
        assert len(basis) == 1
        assert list(basis[0].in_basis("p").terms) == [(degree,)]


def test_primitive_basis_rejects_degree_zero():
    with pytest.raises(PartitionError):
        primitive_basis(0)


def test_subalgebra_rank():
    assert subalgebra_rank([2, 3], 6) == 2
    assert subalgebra_rank([1, 2], 4) == 3
    assert subalgebra_rank([1, 2, 3, 4], 4) == 5
    assert subalgebra_rank([3], 4) == 0


def test_basis_element_and_repr():
    assert repr(basis_element("s", (2, 1))) == "s[2, 1]"
    assert repr(SymFunc({}, "h")) == "0"
    assert repr(ONE) == "1"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
