#!/usr/bin/env python3
"""
Tests for the JSON wire formats
"""

import json
import sys
from fractions import Fraction

import pytest

from core.errors import ParseError, PartitionError
from core.hopf import QSymFunc
from core.schur_pq import gamma_expand
from core.serialization import (
    dumps, load_json, parse_partition, symfunc_from_dict, symfunc_to_dict, terms_to_list, to_jsonable,
)
from core.symfunc import SymFunc, h, p


def test_parse_partition():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition(" 2 ") == (2,)
    assert parse_partition("-") == ()
    with pytest.raises(ParseError):
        parse_partition("2,a")
    with pytest.raises(PartitionError):
        parse_partition("1,2")


def test_terms_are_sorted_by_degree_then_reverse_lex():
    terms = {(1, 1): Fraction(-1), (2,): Fraction(2), (): Fraction(1, 2)}
    assert terms_to_list(terms) == [
        {"partition": [], "num": 1, "den": 2},
        {"partition": [2], "num": 2, "den": 1},
        {"partition": [1, 1], "num": -1, "den": 1},
    ]


def test_symfunc_format():
    f = h(2).in_basis("p")
    data = symfunc_to_dict(f)
    assert data == {
        "basis": "p",
        "terms": [{"partition": [2], "num": 1, "den": 2}, {"partition": [1, 1], "num": 1, "den": 2}],
    }
    assert symfunc_from_dict(json.loads(json.dumps(data))) == h(2)


def test_symfunc_parsing_merges_and_validates():
    merged = symfunc_from_dict({"basis": "h", "terms": [
        {"partition": [1], "num": 1}, {"partition": [1], "num": 1, "den": 2},
    ]})
    assert merged.terms == {(1,): Fraction(3, 2)}
    with pytest.raises(ParseError):
        symfunc_from_dict({"basis": "q", "terms": []})
    with pytest.raises(ParseError):
        symfunc_from_dict({"basis": "h", "terms": [{"partition": [1], "num": 1, "den": 0}]})
    with pytest.raises(ParseError):
        symfunc_from_dict({"basis": "h"})
    with pytest.raises(PartitionError):
        symfunc_from_dict({"basis": "h", "terms": [{"partition": [1, 2], "num": 1}]})


def test_to_jsonable_value_types():
    assert to_jsonable(Fraction(-3, 4)) == {"num": -3, "den": 4}
    assert to_jsonable({((1,), ()): Fraction(2)}) == [{"left": [1], "right": [], "num": 2, "den": 1}]
    assert to_jsonable(QSymFunc({(1, 2): 1})) == {
        "terms": [{"composition": [1, 2], "num": 1, "den": 1}], "integral": True,
    }
    assert to_jsonable(gamma_expand(p(3)))["gamma_terms"] == [
        {"odd_partition": [3], "coeff": 3}, {"odd_partition": [1, 1, 1], "coeff": -2},
    ]
    assert to_jsonable({"nested": [(1, 2), SymFunc({}, "s")]}) == {
        "nested": [[1, 2], {"basis": "s", "terms": []}],
    }


def test_dumps_is_deterministic():
    assert dumps({"b": 1, "a": Fraction(1, 2)}) == '{"a":{"den":2,"num":1},"b":1}'


def test_load_json_errors(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("[1,", encoding="utf-8")
    with pytest.raises(ParseError):
        load_json(str(broken))
    with pytest.raises(ParseError):
        load_json(str(tmp_path / "missing.json"))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
