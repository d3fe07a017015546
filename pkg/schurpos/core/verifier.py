"""
Verification Module for SchurPos
Runs the desk-scale acceptance suites and streams line-delimited report records
"""

import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, TextIO

from .config import SchurPosConfig
from .errors import ParseError, SchurPosError, error_dict
from .hopf import (
    binomial_presentation, canonical_morphism, check_character_preservation, lambda_k_presentation,
    morphism_is_multiplicative, qsym_to_sym, sym_presentation, validate,
)
from .kschur import (
    branch, inclusion_fixes_primitives, kschur_in_h, kschur_in_schur, omega_on_kschur, sign_twist_integral,
)
from .linalg import is_identity
from .oracle import monomial_eval_oracle
from .partitions import k_conjugate, partitions_of
from .schur_pq import p_coefficient_check, p_row, q_row, theta, verify_p_positivity
from .serialization import dumps
from .symfunc import (
    BASES, TRANSITIONS, SymFunc, basis_element, coproduct, h, primitive_basis, subalgebra_rank,
)

Task = Callable[[], Dict[str, Any]]


def _nonnegative_integral(terms: Dict[Any, Fraction]) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in terms.values())


class Report:
    """
    Streams item records, then a summary, through a single writer

    Records are written in input order as soon as they are available. The failure
    count is zero iff the exit code is zero.
    """

    def __init__(self, command: List[str], stream: Optional[TextIO] = None, output_format: str = "json"):
        self.command = list(command)
        self.stream = stream if stream is not None else sys.stdout
        self.output_format = output_format
        self.items = 0
        self.failures = 0
        self.started = time.perf_counter()

    def _write(self, record: Dict[str, Any]) -> None:
        if self.output_format == "text":
            self.stream.write(self._text_line(record) + "\n")
        else:
            self.stream.write(dumps(record) + "\n")
        self.stream.flush()

    @staticmethod
    def _text_line(record: Dict[str, Any]) -> str:
        if record["record"] == "summary":
            return (f"summary {record['suite']}: {record['passed']}/{record['items']} passed, "
                    f"{record['failures']} failed")
        status = "PASS" if record.get("passed") else "FAIL"
        details = {k: v for k, v in record.items() if k not in ("record", "suite", "index", "passed")}
        return f"{status} {record['suite']} #{record['index']} {dumps(details)}"

    def add(self, item: Dict[str, Any]) -> None:
        self.items += 1
        if not item.get("passed"):
            self.failures += 1
        self._write({"record": "item", **item})

    def summary(self, suite: str) -> Dict[str, Any]:
        return {
            "record": "summary",
            "command": self.command,
            "suite": suite,
            "items": self.items,
            "passed": self.items - self.failures,
            "failures": self.failures,
            "duration_seconds": round(time.perf_counter() - self.started, 3),
        }

    def finish(self, suite: str) -> Dict[str, Any]:
        record = self.summary(suite)
        self._write(record)
        return record

    @property
    def exit_code(self) -> int:
        return 0 if self.failures == 0 else 1


class SchurPosVerifier:
    """
    Runs the acceptance suites

    Each suite expands into independent items; items run on a thread pool and their
    records are emitted in deterministic input order.
    """

    def __init__(self, workers: Optional[int] = None, quiet: bool = False):
        self.workers = workers or SchurPosConfig.WORKERS
        self.quiet = quiet
        self.suites: Dict[str, Callable[[int, Optional[int]], List[Task]]] = {
            "degeneration": self._degeneration,
            "branch-pos": self._branch_pos,
            "kschur-pos": self._kschur_pos,
            "p-pos": self._p_pos,
            "integrality": self._integrality,
            "coeff": self._coeff,
            "fractional": self._fractional,
            "theta": self._theta,
            "primitive": self._primitive,
            "ranks": self._ranks,
            "omega": self._omega,
            "hopf": self._hopf,
            "oracle": self._oracle,
        }

    def _status(self, message: str) -> None:
        if not self.quiet:
            print(message, file=sys.stderr)

    def run(self, suite: str, max_degree: int, k: Optional[int] = None, force: bool = False,
            report: Optional[Report] = None) -> Report:
        """
        Run one suite (or "all") and stream its records

        Args:
            suite: Suite name from SchurPosConfig.SUITES, or "all"
            max_degree: Largest degree examined
            k: Restrict k-dependent suites to this k
            force: Allow degrees above the hard cap
            report: Report to write into (a stdout report by default)

        Returns:
            Report: The finished report
        """
        SchurPosConfig.check_degree(max_degree, force)
        if k is not None and k < 1:
            raise ParseError(f"--k must be a positive integer, got {k}")
        names = list(self.suites) if suite == "all" else [suite]
        for name in names:
            if name not in self.suites:
                raise SchurPosError(f"unknown suite {name!r}, expected one of {list(self.suites)} or 'all'")
        report = report or Report(["verify", "--suite", suite, "--max-degree", str(max_degree)])

        for name in names:
            self._status(f"🧪 {name}: {SchurPosConfig.SUITES[name]}")
            before = report.failures
            tasks = self.suites[name](max_degree, k)
            for index, item in enumerate(self._execute(tasks)):
                report.add({"suite": name, "index": index, **item})
            if report.failures == before:
                self._status(f"✅ {name}: {len(tasks)} items passed")
            else:
                self._status(f"❌ {name}: {report.failures - before} of {len(tasks)} items failed")
        report.finish(suite)
        return report

    def _execute(self, tasks: List[Task]) -> Iterable[Dict[str, Any]]:
        if self.workers <= 1:
            return (self._guard(task) for task in tasks)
        executor = ThreadPoolExecutor(max_workers=self.workers)
        try:
            return list(executor.map(self._guard, tasks))
        finally:
            executor.shutdown(wait=True)

    @staticmethod
    def _guard(task: Task) -> Dict[str, Any]:
        try:
            return task()
        except SchurPosError as e:
            return {"passed": False, **error_dict(e)}
        except Exception as e:
            return {"passed": False, **error_dict(e, context="unexpected")}

    # -- suites ------------------------------------------------------------

    @staticmethod
    def _ks(k: Optional[int], default: Iterable[int]) -> List[int]:
        return [k] if k is not None else list(default)

    def _degeneration(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(la: tuple, kk: int) -> Dict[str, Any]:
            expansion = kschur_in_schur(kk, la)
            return {"k": kk, "partition": list(la), "schur": expansion,
                    "passed": expansion.terms == {la: 1}}

        return [lambda la=la, kk=kk: check(la, kk)
                for d in range(1, min(max_degree, 6) + 1)
                for la in partitions_of(d)
                for kk in (d, d + 1)]

    def _bounded_range(self, max_degree: int, k: Optional[int]) -> List[tuple]:
        pairs = []
        for kk in self._ks(k, (1, 2, 3)):
            top = min(max_degree, 7 if kk == 3 else 8)
            for d in range(1, top + 1):
                for la in partitions_of(d, max_part=kk):
                    pairs.append((kk, la))
        return pairs

    def _branch_pos(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(kk: int, la: tuple) -> Dict[str, Any]:
            coordinates = branch(kk, la)
            return {"k": kk, "partition": list(la), "coordinates": coordinates,
                    "passed": _nonnegative_integral(coordinates)}

        return [lambda kk=kk, la=la: check(kk, la) for kk, la in self._bounded_range(max_degree, k)]

    def _kschur_pos(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(kk: int, la: tuple) -> Dict[str, Any]:
            expansion = kschur_in_schur(kk, la)
            return {"k": kk, "partition": list(la), "schur": expansion,
                    "passed": _nonnegative_integral(expansion.terms)}

        return [lambda kk=kk, la=la: check(kk, la) for kk, la in self._bounded_range(max_degree, k)]

    def _p_pos(self, max_degree: int, k: Optional[int]) -> List[Task]:
        items = verify_p_positivity(min(max_degree, 8))["items"]
        return [lambda item=item: item for item in items]

    def _integrality(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(i: int) -> Dict[str, Any]:
            flags = {}
            for tag in ("h", "e", "m", "s"):
                flags[tag] = p_row(i).in_basis(tag).is_integral() and q_row(i).in_basis(tag).is_integral()
            return {"i": i, "monomial": p_row(i).in_basis("m"), "integral": flags,
                    "passed": all(flags.values())}

        return [lambda i=i: check(i) for i in range(1, max_degree + 1)]

    def _coeff(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(i: int) -> Dict[str, Any]:
            coefficient = p_coefficient_check(i)
            odd_support = all(part % 2 for la in p_row(i).in_basis("p").terms for part in la)
            return {"i": i, "coefficient": coefficient, "odd_support": odd_support,
                    "passed": coefficient == Fraction(1, i) and odd_support}

        return [lambda i=i: check(i) for i in range(1, min(max_degree, 9) + 1, 2)]

    def _fractional(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(j: int) -> Dict[str, Any]:
            coefficient = basis_element("e", (j,)).in_basis("p").coefficient((j,))
            item: Dict[str, Any] = {"j": j, "coefficient": coefficient, "sign": 1 if coefficient > 0 else -1}
            passed = abs(coefficient) == Fraction(1, j)
            twist = sign_twist_integral(j, -1)
            item["twist_integral"] = twist
            passed = passed and twist == (j < 3)
            if j >= 3:
                e_j = basis_element("e", (j,))
                shift = SymFunc({(j,): Fraction(2, j)}, "p")
                plus = (e_j + shift).in_basis("m").is_integral()
                minus = (e_j - shift).in_basis("m").is_integral()
                item.update({"plus_integral": plus, "minus_integral": minus})
                passed = passed and not plus and not minus
            item["passed"] = passed
            return item

        return [lambda j=j: check(j) for j in range(2, min(max_degree, 8) + 1)]

    def _theta(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def generator(i: int) -> Dict[str, Any]:
            theta_p = theta(basis_element("p", (i,)))
            expected = SymFunc({}, "p") if i % 2 == 0 else SymFunc({(i,): 2}, "p")
            image = theta(h(i))
            comultiplicative = coproduct(image) == coproduct(h(i)).map_legs(theta)
            return {"i": i, "theta_h": image, "matches_q_row": image == q_row(i),
                    "power_sum_rule": theta_p == expected, "comultiplicative": comultiplicative,
                    "passed": image == q_row(i) and theta_p == expected and comultiplicative}

        def pair(i: int, j: int) -> Dict[str, Any]:
            product = theta(h(i, j))
            expected = theta(h(i)) * theta(h(j))
            comultiplicative = coproduct(product) == coproduct(h(i, j)).map_legs(theta)
            return {"pair": [i, j], "multiplicative": product == expected,
                    "comultiplicative": comultiplicative,
                    "passed": product == expected and comultiplicative}

        tasks: List[Task] = [lambda i=i: generator(i) for i in range(1, max_degree + 1)]
        tasks += [lambda i=i, j=j: pair(i, j)
                  for i in range(1, max_degree + 1) for j in range(1, i + 1) if i + j <= min(max_degree, 8)]
        return tasks

    def _primitive(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(d: int) -> Dict[str, Any]:
            vectors = primitive_basis(d)
            p_d = basis_element("p", (d,))
            contains = False
            if len(vectors) == 1:
                v = vectors[0]
                la, c = next(iter(p_d.h_terms.items()))
                scale = c / v.h_terms[la] if v.h_terms.get(la) else None
                contains = scale is not None and v * scale == p_d
            return {"degree": d, "rank": len(vectors), "contains_p": contains,
                    "passed": len(vectors) == 1 and contains}

        return [lambda d=d: check(d) for d in range(1, min(max_degree, 8) + 1)]

    def _ranks(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def su(n: int) -> Dict[str, Any]:
            ok = all(subalgebra_rank(range(1, n), d) == subalgebra_rank(range(1, n + 1), d) for d in range(n))
            return {"chain": "SU", "n": n, "passed": ok}

        def sp(n: int) -> Dict[str, Any]:
            ok = all(subalgebra_rank(range(1, 2 * n, 2), d) == subalgebra_rank(range(1, 2 * n + 2, 2), d)
                     for d in range(2 * n + 1))
            return {"chain": "Sp", "n": n, "passed": ok}

        def inclusion(n: int) -> Dict[str, Any]:
            return {"chain": "inclusion", "n": n, "passed": inclusion_fixes_primitives(n)}

        tasks: List[Task] = [lambda n=n: su(n) for n in range(2, 9)]
        tasks += [lambda n=n: sp(n) for n in range(1, 6)]
        tasks += [lambda n=n: inclusion(n) for n in range(2, min(max_degree, 5) + 1)]
        return tasks

    def _omega(self, max_degree: int, k: Optional[int]) -> List[Task]:
        def check(kk: int, la: tuple) -> Dict[str, Any]:
            index, coefficient = omega_on_kschur(kk, la)
            return {"k": kk, "partition": list(la), "image": list(index), "coefficient": coefficient,
                    "k_conjugate": index == k_conjugate(la, kk), "passed": coefficient == 1}

        return [lambda kk=kk, la=la: check(kk, la)
                for kk in self._ks(k, (1, 2, 3))
                for d in range(1, min(max_degree, 7) + 1)
                for la in partitions_of(d, max_part=kk)]

    def _hopf(self, max_degree: int, k: Optional[int]) -> List[Task]:
        top = min(max_degree, 6)

        def axioms(name: str, build: Callable) -> Dict[str, Any]:
            report = validate(build())
            return {"presentation": name, "check": "axioms", "report": report,
                    "passed": report["valid"] and report["cocommutative"]}

        def sym_identity() -> Dict[str, Any]:
            hp = sym_presentation(top)
            bad = []
            for d in range(top + 1):
                for i, la in enumerate(partitions_of(d)):
                    image = qsym_to_sym(canonical_morphism(hp, {(d, i): 1}))
                    if image != basis_element("h", la):
                        bad.append(list(la))
            return {"presentation": "sym", "check": "identity", "mismatches": bad, "passed": not bad}

        def lands_in_sym(name: str, build: Callable) -> Dict[str, Any]:
            hp = build()
            integral = True
            for key in hp.all_keys():
                image = canonical_morphism(hp, {key: 1})
                integral = integral and image.is_integral()
                qsym_to_sym(image)
            samples = [hp.label(key) for key in hp.all_keys() if 0 < key[0] <= 3]
            preservation = check_character_preservation(hp, samples)
            multiplicative = morphism_is_multiplicative(hp)
            return {"presentation": name, "check": "terminal", "integral": integral,
                    "character_preserved": preservation["preserved"], "multiplicative": multiplicative,
                    "passed": preservation["preserved"] and multiplicative}

        def inclusion(kk: int) -> Dict[str, Any]:
            hp = lambda_k_presentation(kk, top)
            bad = []
            for d in range(top + 1):
                for i, la in enumerate(partitions_of(d, max_part=kk)):
                    if qsym_to_sym(canonical_morphism(hp, {(d, i): 1})) != kschur_in_h(kk, la):
                        bad.append(list(la))
            return {"presentation": f"lambda-{kk}", "check": "inclusion", "mismatches": bad, "passed": not bad}

        gallery = [("sym", lambda: sym_presentation(top)), ("binomial", lambda: binomial_presentation(top))]
        gallery += [(f"lambda-{kk}", lambda kk=kk: lambda_k_presentation(kk, top)) for kk in self._ks(k, (1, 2, 3))]
        tasks: List[Task] = [lambda name=name, build=build: axioms(name, build) for name, build in gallery]
        tasks.append(sym_identity)
        tasks += [lambda name=name, build=build: lands_in_sym(name, build) for name, build in gallery]
        tasks += [lambda kk=kk: inclusion(kk) for kk in self._ks(k, (2,))]
        return tasks

    def _oracle(self, max_degree: int, k: Optional[int]) -> List[Task]:
        n_vars = SchurPosConfig.ORACLE_VARIABLES

        def agreement(tag: str, la: tuple) -> Dict[str, Any]:
            f = basis_element(tag, la)
            expected = monomial_eval_oracle(f, n_vars)
            disagreeing = [other for other in BASES
                           if other != tag and monomial_eval_oracle(f.in_basis(other), n_vars) != expected]
            return {"basis": tag, "partition": list(la), "disagreeing": disagreeing, "passed": not disagreeing}

        def cycle(d: int) -> Dict[str, Any]:
            flags = {}
            for tag in ("s", "p", "m", "e"):
                forward = TRANSITIONS.get(d, "h", tag)
                backward = TRANSITIONS.get(d, tag, "h")
                flags[tag] = is_identity(forward.dot(backward))
            return {"degree": d, "cycles": flags, "passed": all(flags.values())}

        tasks: List[Task] = [lambda tag=tag, la=la: agreement(tag, la)
                             for d in range(1, min(max_degree, 6, n_vars) + 1)
                             for la in partitions_of(d)
                             for tag in BASES]
        tasks += [lambda d=d: cycle(d) for d in range(1, min(max_degree, 9) + 1)]
        return tasks
