import json

import pytest

from ..report import (Check, ReportInputs, Verdict, VerificationReport,
                      dump_json, exit_code, load_report)
from ..summary import format_report, format_table, format_vector, text_outline
from .conftest import analysis_of


def _report(**kwargs) -> VerificationReport:
    return VerificationReport("demo", ReportInputs("K", "Q", seed=1, trials=3), **kwargs)


@pytest.mark.parametrize(
    "passed, applicable, hypothesis_met, verdict",
    [
        pytest.param(True, True, True, Verdict.passed, id="pass"),
        pytest.param(False, True, True, Verdict.failed, id="fail"),
        pytest.param(False, False, True, Verdict.not_applicable, id="not-applicable"),
        pytest.param(True, True, False, Verdict.hypothesis_not_met, id="hypothesis"),
        pytest.param(False, False, False, Verdict.hypothesis_not_met, id="hypothesis-first"),
    ],
)
def test_conclude(passed, applicable, hypothesis_met, verdict):
    report = _report()
    report.check("one", 1, 1)
    report.check("two", 1, 1 if passed else 2)
    assert report.conclude(applicable=applicable, hypothesis_met=hypothesis_met) == verdict
    assert report.verdict == verdict


def test_check_normalizes_tuples():
    report = _report()
    assert report.check("vector", (1, 2), [1, 2])
    assert report.checks[0].expected == [1, 2]
    assert not report.check("explicit", 3, 4, passed=False)
    assert report.check("override", 3, 4, passed=True)
    with pytest.raises(KeyError):
        report.get_check("missing")


def test_notes_are_unique():
    report = _report()
    report.note("a")
    report.note("a")
    assert report.notes == ["a"]


def test_exit_code():
    passed, failed = _report(), _report()
    passed.check("x", 1, 1)
    passed.conclude()
    failed.check("x", 1, 2)
    failed.conclude()
    assert exit_code([passed]) == 0
    assert exit_code([passed, failed]) == 1
    assert exit_code([]) == 0


def test_json_form():
    report = _report(notes=["hello"])
    report.check("dims", (1, 4), (1, 4))
    report.conclude()
    data = json.loads(dump_json(VerificationReport, report))
    assert data["theorem"] == "demo"
    assert data["verdict"] == "PASS"
    assert data["checks"] == [{"name": "dims", "expected": [1, 4], "observed": [1, 4], "pass": True}]
    assert data["inputs"] == {"complex": "K", "field": "Q", "seed": 1, "trials": 3}
    assert load_report(dump_json(VerificationReport, report)) == report


def test_json_is_deterministic():
    first = dump_json(VerificationReport, analysis_of("torus7").socle_report())
    second = dump_json(VerificationReport, analysis_of("torus7").socle_report())
    assert first == second


def test_format_report():
    report = _report()
    report.check("dims", (1, 4), (1, 4))
    report.check("rank", 4, 3)
    report.note("characteristic-p evidence")
    report.conclude()
    assert format_report(report).splitlines() == [
        "demo [K, Q]",
        "  dims: (1, 4) -- ok",
        "  rank: expected 4, observed 3 -- FAILED",
        "  note: characteristic-p evidence",
        "  verdict: FAIL",
    ]


def test_format_table():
    table = format_table(["name", "h"], [["torus7", (1, 4)], ["x", None]])
    assert table.splitlines() == [
        "name    h",
        "torus7  (1, 4)",
        "x       -",
    ]
    assert format_vector([0, 0, 6, 1]) == "(0, 0, 6, 1)"
    assert format_vector([1]) == "(1)"


def test_text_outline():
    check = Check("dims", [1], [1], True)
    assert text_outline(check).splitlines() == [
        "<Check>",
        "name: dims",
        "expected: (1)",
        "observed: (1)",
        "passed: True",
    ]
    assert text_outline(None) is None
    assert text_outline(Verdict.passed) == "PASS"
    assert text_outline({"a": 1}) == "- a: 1"


def test_conclude_uncertified():
    report = _report()
    report.check("one", 1, 1)
    assert report.conclude(certified=False) == Verdict.inconclusive
    assert exit_code([report]) == 0
    report.check("two", 1, 2)
    assert report.conclude(certified=False) == Verdict.failed
    assert report.conclude(applicable=False, certified=False) == Verdict.not_applicable
