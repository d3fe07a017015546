"""
Serialization Module for SchurPos
JSON wire formats for partitions, symmetric functions, Gamma elements, QSym elements and
report payloads
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Mapping

import numpy as np

from .errors import ParseError, PartitionError
from .hopf import QSymFunc
from .partitions import Partition, make_partition, order_key
from .schur_pq import GammaElement
from .symfunc import BASES, SymFunc


def parse_partition(text: str) -> Partition:
    """
    Parse a command-line partition

    Args:
        text: Comma-separated decreasing integers, or "-" for the empty partition

    Returns:
        Partition: Validated partition
    """
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = [int(piece) for piece in text.split(",")]
    except ValueError as e:
        raise ParseError(f"cannot read partition {text!r}: {e}") from e
    return make_partition(parts)


def fraction_dict(c: Fraction) -> Dict[str, int]:
    c = Fraction(c)
    return {"num": c.numerator, "den": c.denominator}


def terms_to_list(terms: Mapping[Partition, Fraction], key: str = "partition") -> List[Dict[str, Any]]:
    """Coefficient map as a list of records sorted by degree then reverse lexicographic order."""
    return [
        {key: list(la), **fraction_dict(c)}
        for la, c in sorted(terms.items(), key=lambda item: order_key(item[0]))
        if c
    ]


def symfunc_to_dict(f: SymFunc) -> Dict[str, Any]:
    return {"basis": f.basis, "terms": terms_to_list(f.terms)}


def symfunc_from_dict(data: Mapping[str, Any]) -> SymFunc:
    """Parse the symmetric-function format; malformed payloads raise ParseError."""
    try:
        basis = data["basis"]
        if basis not in BASES:
            raise ParseError(f"unknown basis {basis!r}, expected one of {BASES}")
        terms: Dict[Partition, Fraction] = {}
        for term in data["terms"]:
            la = make_partition(term["partition"])
            den = int(term.get("den", 1))
            if den <= 0:
                raise ParseError(f"denominator must be positive, got {den}")
            terms[la] = terms.get(la, Fraction(0)) + Fraction(int(term["num"]), den)
    except (ParseError, PartitionError):
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed symmetric function: {type(e).__name__}: {e}") from e
    return SymFunc(terms, basis)


def gamma_to_dict(g: GammaElement) -> Dict[str, Any]:
    return {
        "sym": symfunc_to_dict(g.sym),
        "gamma_terms": [{"odd_partition": list(mu), "coeff": int(c)} for mu, c in g.sorted_terms()],
    }


def qsym_to_dict(f: QSymFunc) -> Dict[str, Any]:
    return {
        "terms": [{"composition": list(alpha), **fraction_dict(c)} for alpha, c in f.sorted_terms()],
        "integral": f.is_integral(),
    }


def to_jsonable(value: Any) -> Any:
    """Convert report payloads (SymFunc, Fraction, coefficient maps, tuples) into JSON values."""
    if isinstance(value, SymFunc):
        return symfunc_to_dict(value)
    if isinstance(value, QSymFunc):
        return qsym_to_dict(value)
    if isinstance(value, GammaElement):
        return gamma_to_dict(value)
    if isinstance(value, Fraction):
        return fraction_dict(value)
    if isinstance(value, (bool, str, int, float)) or value is None:
        return value
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, Mapping):
        if value and all(isinstance(key, tuple) and all(isinstance(p, int) for p in key) for key in value):
            return terms_to_list(value)
        if value and all(isinstance(key, tuple) and len(key) == 2 and isinstance(key[0], tuple) for key in value):
            return [
                {"left": list(left), "right": list(right), **fraction_dict(c)}
                for (left, right), c in sorted(value.items(), key=lambda item: (order_key(item[0][0]), order_key(item[0][1])))
            ]
        return {str(key): to_jsonable(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return repr(value)


def dumps(value: Any) -> str:
    """Deterministic single-line JSON."""
    return json.dumps(to_jsonable(value), sort_keys=True, separators=(",", ":"))


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from e
