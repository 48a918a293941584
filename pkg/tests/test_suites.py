import json

import pytest

from sl2hecke.report import Check, Report, check
from sl2hecke.suites import GROUPS, SUITES, Options, run_suite


def test_report_lines():
    assert check("a.b", "holds", True).line() == "PASS  a.b: holds"
    assert check("a.b", "holds", False, "x=1").line() == "FAIL  a.b: holds  [x=1]"


def test_report_serialisation():
    r = Report("demo", 5, 2, [Check("x", "s", True)], {"len_bound": 3}, {"total": 0.1})
    d = json.loads(r.to_json(with_timing=False))
    assert d == {"suite": "demo", "p": 5, "g": 2, "bounds": {"len_bound": 3}, "passed": True,
                 "counts": {"total": 1, "failed": 0}, "checks": [{"id": "x", "statement": "s", "passed": True, "witness": ""}]}
    assert r.to_text().splitlines()[-1] == "1/1 checks passed"


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes_p5(suite):
    r = run_suite(5, suite)
    assert r.passed, [c.line() for c in r.failures]


def test_ids_unique_and_ordered():
    r = run_suite(5, "all")
    ids = [c.id for c in r.checks]
    assert len(ids) == len(set(ids))
    prefixes = [i.split(".")[0] for i in ids]
    assert prefixes == sorted(prefixes, key=SUITES.index)


def test_deterministic_across_workers():
    a = run_suite(7, "all", workers=1).to_dict(with_timing=False)
    b = run_suite(7, "all", workers=4).to_dict(with_timing=False)
    assert a == b


def test_timing_recorded():
    r = run_suite(5, "appendix")
    assert set(r.timing) == {g.__name__ for g in GROUPS["appendix"]} | {"total"}


def test_bounds_recorded():
    r = run_suite(5, "bimodule", Options(len_bound=4))
    assert r.bounds["len_bound"] == 4
    assert any("length bound 4" in c.statement for c in r.checks)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite(5, "nope")
