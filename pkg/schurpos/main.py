#!/usr/bin/env python3
"""
SchurPos - Main Application Entry Point
Exact symmetric functions, k-Schur branching, Schur P/Q functions and combinatorial
Hopf algebras, with desk-scale verification sweeps

Usage:
    python main.py expand --family kschur --k 2 --index 2,1 --basis s
    python main.py branch --k 1 --lambda 1,1
    python main.py verify --suite p-pos --max-degree 3
    python main.py hopf --gallery binomial --degree 4
"""

import sys
import os
import argparse
import json
from fractions import Fraction
from typing import Any, List, Optional

# Add current directory to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from core import __description__, __version__
from core.config import SchurPosConfig
from core.errors import (
    BoundedError, DegreeLimitError, ParseError, PartitionError, PresentationError, SchurPosError, error_dict,
)
from core.hopf import (
    GALLERY, HopfPresentation, canonical_morphism, gallery, presentation_from_dict, presentation_to_dict,
    qsym_to_sym, validate,
)
from core.kschur import branch, golden_block, kschur_in_h
from core.partitions import make_strict_partition, require_bounded
from core.schur_pq import gamma_expand, p_lambda, q_lambda, theta
from core.serialization import dumps, load_json, parse_partition, symfunc_from_dict, to_jsonable
from core.symfunc import SymFunc, basis_element
from core.verifier import Report, SchurPosVerifier

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

INPUT_ERRORS = (ParseError, PartitionError, BoundedError, DegreeLimitError, PresentationError)


def _status(args: argparse.Namespace, message: str) -> None:
    if not getattr(args, "quiet", False):
        print(message, file=sys.stderr)


def _text(value: Any, indent: str = "") -> str:
    """Human-readable rendering for --output text"""
    if isinstance(value, SymFunc):
        return repr(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            rendered = _text(item, indent + "  ")
            if "\n" in rendered:
                lines.append(f"{indent}{key}:\n{rendered}")
            else:
                lines.append(f"{indent}{key}: {rendered.strip()}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(f"{indent}- {_text(item).strip()}" for item in value)
    return str(to_jsonable(value))


def _emit(args: argparse.Namespace, payload: Any) -> None:
    if args.output == "text":
        print(_text(payload))
    else:
        print(dumps(payload))


def _coordinates(terms: dict) -> List[dict]:
    return to_jsonable(dict(terms)) if terms else []


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def run_expand(args: argparse.Namespace) -> int:
    """Expand one basis element of a family in a target basis"""
    index = parse_partition(args.index)
    SchurPosConfig.check_degree(sum(index), args.force)
    if args.family == "kschur":
        if args.k is None:
            raise ParseError("--family kschur needs --k")
        require_bounded(index, args.k)
        f = kschur_in_h(args.k, index)
    elif args.family == "schur-p":
        f = p_lambda(make_strict_partition(index))
    elif args.family == "schur-q":
        f = q_lambda(make_strict_partition(index))
    else:
        f = basis_element(args.family, index)
    converted = f.in_basis(args.basis)
    _emit(args, converted)
    return EXIT_OK


def run_branch(args: argparse.Namespace) -> int:
    """k-Schur function in (k+1)-Schur coordinates"""
    la = parse_partition(args.la)
    SchurPosConfig.check_degree(sum(la), args.force)
    coordinates = branch(args.k, la)
    _emit(args, {"k": args.k, "lambda": list(la), "coordinates": _coordinates(coordinates)})
    return EXIT_OK


def run_theta(args: argparse.Namespace) -> int:
    f = symfunc_from_dict(load_json(args.input))
    SchurPosConfig.check_degree(f.max_degree(), args.force)
    _emit(args, theta(f).in_basis(f.basis))
    return EXIT_OK


def run_gamma(args: argparse.Namespace) -> int:
    """Membership in Z[P_1, P_3, ...]; membership errors are failures, not input errors"""
    f = symfunc_from_dict(load_json(args.input))
    SchurPosConfig.check_degree(f.max_degree(), args.force)
    if args.bound is not None and args.bound % 2 == 0:
        raise ParseError(f"--bound must be odd, got {args.bound}")
    element = gamma_expand(f, args.bound)
    _emit(args, element)
    return EXIT_OK


def _load_presentation(args: argparse.Namespace) -> HopfPresentation:
    if args.presentation:
        return presentation_from_dict(load_json(args.presentation), name=os.path.basename(args.presentation))
    if args.gallery:
        degree = SchurPosConfig.check_degree(args.degree, args.force)
        return gallery(args.gallery, degree, args.k if args.k is not None else 2)
    raise ParseError("hopf needs --presentation FILE or --gallery NAME")


def run_hopf(args: argparse.Namespace) -> int:
    """Validate a presentation and print the canonical morphism to QSym"""
    hp = _load_presentation(args)
    if args.export:
        with open(args.export, "w", encoding="utf-8") as f:
            json.dump(presentation_to_dict(hp), f, sort_keys=True)
        _status(args, f"✅ Presentation written to {args.export}")

    report = validate(hp)
    _emit(args, {"record": "validation", "presentation": hp.name, **report})
    if not report["valid"]:
        _status(args, f"❌ {hp.name} is not a Hopf algebra with a multiplicative character")
        return EXIT_FAILED

    labels = [args.element] if args.element else [hp.label(key) for key in hp.all_keys()]
    status = EXIT_OK
    for label in labels:
        image = canonical_morphism(hp, label)
        record = {"record": "morphism", "element": label, "qsym": image}
        try:
            record["sym"] = qsym_to_sym(image)
        except SchurPosError as e:
            record.update(error_dict(e))
            status = EXIT_FAILED if report["cocommutative"] else status
        _emit(args, record)
    return status


def run_kmatrix(args: argparse.Namespace) -> int:
    SchurPosConfig.check_degree(args.degree, args.force)
    _emit(args, golden_block(args.k, args.degree))
    return EXIT_OK


def run_verify(args: argparse.Namespace) -> int:
    verifier = SchurPosVerifier(workers=args.workers, quiet=args.quiet)
    report = Report(sys.argv[1:] if args.argv is None else args.argv, output_format=args.output)
    verifier.run(args.suite, args.max_degree, k=args.k, force=args.force, report=report)
    return report.exit_code


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=SchurPosConfig.OUTPUT_FORMATS,
        default=SchurPosConfig.OUTPUT_FORMAT,
        help="Serialization of results (default from SCHURPOS_OUTPUT)"
    )
    common.add_argument(
        "--force",
        action="store_true",
        help=f"Allow degrees above {SchurPosConfig.MAX_DEGREE_HARD_CAP}"
    )
    common.add_argument(
        "--quiet",
        action="store_true",
        help="Suppress status messages on stderr"
    )

    parser = argparse.ArgumentParser(
        description=f"SchurPos {__version__} - {__description__}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py expand --family kschur --k 2 --index 2,1 --basis s
  python main.py branch --k 1 --lambda 1,1
  python main.py gamma --input p3.json --bound 3
  python main.py verify --suite all --max-degree 8
        """
    )
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", parents=[common], help="Expand a basis element")
    expand.add_argument("--family", choices=SchurPosConfig.FAMILIES, required=True)
    expand.add_argument("--index", required=True, help="Partition such as 2,1 (or - for the empty one)")
    expand.add_argument("--k", type=int, help="Bound for the kschur family")
    expand.add_argument("--basis", choices=SchurPosConfig.BASES, required=True)
    expand.set_defaults(handler=run_expand)

    branch_cmd = sub.add_parser("branch", parents=[common], help="k-Schur to (k+1)-Schur coordinates")
    branch_cmd.add_argument("--k", type=int, required=True)
    branch_cmd.add_argument("--lambda", dest="la", required=True)
    branch_cmd.set_defaults(handler=run_branch)

    theta_cmd = sub.add_parser("theta", parents=[common], help="Apply theta to a symmetric function file")
    theta_cmd.add_argument("--input", required=True)
    theta_cmd.set_defaults(handler=run_theta)

    gamma = sub.add_parser("gamma", parents=[common], help="Expand in the odd one-row P functions")
    gamma.add_argument("--input", required=True)
    gamma.add_argument("--bound", type=int, help="Largest odd generator index")
    gamma.set_defaults(handler=run_gamma)

    hopf = sub.add_parser("hopf", parents=[common], help="Validate a presentation and map it to QSym")
    source = hopf.add_mutually_exclusive_group(required=True)
    source.add_argument("--presentation", help="Presentation JSON file")
    source.add_argument("--gallery", choices=GALLERY, help="Built-in presentation")
    hopf.add_argument("--degree", type=int, default=4, help="Truncation degree of a gallery presentation")
    hopf.add_argument("--k", type=int, help="Bound of the lambda-k gallery presentation")
    hopf.add_argument("--element", help="Only map this basis label")
    hopf.add_argument("--export", help="Write the presentation JSON to this file")
    hopf.set_defaults(handler=run_hopf)

    kmatrix = sub.add_parser("kmatrix", parents=[common], help="Print the K matrix of one (k, degree) block")
    kmatrix.add_argument("--k", type=int, required=True)
    kmatrix.add_argument("--degree", type=int, required=True)
    kmatrix.set_defaults(handler=run_kmatrix)

    verify = sub.add_parser("verify", parents=[common], help="Run acceptance suites")
    verify.add_argument("--suite", choices=list(SchurPosConfig.SUITES) + ["all"], required=True)
    verify.add_argument("--max-degree", type=int, default=SchurPosConfig.DEFAULT_MAX_DEGREE)
    verify.add_argument("--k", type=int, help="Restrict k-dependent suites to one k")
    verify.add_argument("--workers", type=int, default=SchurPosConfig.WORKERS)
    verify.set_defaults(handler=run_verify)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, run the command and map the outcome to an exit code

    Args:
        argv: Arguments without the program name (sys.argv[1:] by default)

    Returns:
        int: 0 on success, 1 on a failed check, 2 on unusable input
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT
    args.argv = argv

    try:
        return args.handler(args)
    except INPUT_ERRORS as e:
        _status(args, f"❌ {e}")
        _emit(args, error_dict(e))
        return EXIT_INPUT
    except SchurPosError as e:
        _status(args, f"❌ {e}")
        _emit(args, error_dict(e))
        return EXIT_FAILED
    except OSError as e:
        _status(args, f"❌ {e}")
        _emit(args, error_dict(e))
        return EXIT_INPUT


def main():
    """Main function"""
    if not SchurPosConfig.validate_config():
        return EXIT_INPUT
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
