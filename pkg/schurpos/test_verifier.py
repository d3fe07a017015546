#!/usr/bin/env python3
"""
Tests for report streaming and the verification driver
"""

import io
import json
import sys

import pytest

from core.config import SchurPosConfig
from core.errors import DegreeLimitError, ParseError, SchurPosError
from core.verifier import Report, SchurPosVerifier


def _lines(stream):
    return [json.loads(line) for line in stream.getvalue().splitlines()]


def test_report_counts_failures():
    stream = io.StringIO()
    report = Report(["verify"], stream=stream)
    report.add({"suite": "x", "index": 0, "passed": True})
    report.add({"suite": "x", "index": 1, "passed": False})
    summary = report.finish("x")
    assert summary["items"] == 2
    assert summary["failures"] == 1
    assert report.exit_code == 1
    records = _lines(stream)
    assert [r["record"] for r in records] == ["item", "item", "summary"]
    assert "duration_seconds" in records[-1]


def test_text_report():
    stream = io.StringIO()
    report = Report(["verify"], stream=stream, output_format="text")
    report.add({"suite": "coeff", "index": 0, "i": 1, "passed": True})
    report.finish("coeff")
    first, last = stream.getvalue().splitlines()
    assert first.startswith("PASS coeff #0")
    assert last == "summary coeff: 1/1 passed, 0 failed"


def test_run_streams_items_in_order():
    stream = io.StringIO()
    report = Report(["verify"], stream=stream)
    SchurPosVerifier(workers=1, quiet=True).run("coeff", 7, report=report)
    items = [r for r in _lines(stream) if r["record"] == "item"]
    assert [item["i"] for item in items] == [1, 3, 5, 7]
    assert [item["index"] for item in items] == [0, 1, 2, 3]
    assert report.exit_code == 0


def test_fractional_items_record_the_sign_twist():
    stream = io.StringIO()
    report = Report(["verify"], stream=stream)
    SchurPosVerifier(quiet=True).run("fractional", 5, report=report)
    items = [r for r in _lines(stream) if r["record"] == "item"]
    assert [item["j"] for item in items] == [2, 3, 4, 5]
    assert [item["twist_integral"] for item in items] == [True, False, False, False]
    assert report.exit_code == 0


def test_thread_pool_matches_sequential_run():
    outputs = []
    for workers in (1, 3):
        stream = io.StringIO()
        SchurPosVerifier(workers=workers, quiet=True).run("primitive", 5, report=Report(["verify"], stream=stream))
        outputs.append([{k: v for k, v in r.items() if k != "duration_seconds"} for r in _lines(stream)])
    assert outputs[0] == outputs[1]


def test_errors_become_failed_items():
    verifier = SchurPosVerifier(quiet=True)

    def broken():
        raise SchurPosError("boom")

    assert verifier._guard(broken) == {"passed": False, "error": "boom", "code": "schurpos"}


def test_run_guards():
    verifier = SchurPosVerifier(quiet=True)
    with pytest.raises(DegreeLimitError):
        verifier.run("coeff", SchurPosConfig.MAX_DEGREE_HARD_CAP + 1, report=Report([], stream=io.StringIO()))
    with pytest.raises(SchurPosError):
        verifier.run("nope", 3, report=Report([], stream=io.StringIO()))
    with pytest.raises(ParseError):
        verifier.run("branch-pos", 4, k=0, report=Report([], stream=io.StringIO()))


def test_every_suite_is_registered():
    assert set(SchurPosVerifier().suites) == set(SchurPosConfig.SUITES)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
