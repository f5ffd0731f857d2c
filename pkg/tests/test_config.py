import pytest
from pydantic import ValidationError

from polylog_congruences.errors import PreconditionViolated
from polylog_congruences.schemas.case import CaseDescriptor
from polylog_congruences.schemas.report import CaseResult, Report, Summary
from polylog_congruences.settings import Settings
from polylog_congruences.utils.primes import parse_primes


def test_settings_defaults(monkeypatch):
    for name in ("POLYLOG_JOBS", "POLYLOG_GUARD_DIGITS", "POLYLOG_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    s = Settings(_env_file=None)
    assert s.guard_digits == 2
    assert s.jobs == 1
    assert s.log_level == "WARNING"


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("POLYLOG_JOBS", "4")
    monkeypatch.setenv("POLYLOG_LOG_LEVEL", "debug")
    s = Settings(_env_file=None)
    assert s.jobs == 4
    assert s.log_level == "DEBUG"


@pytest.mark.parametrize(
    "field,value",
    [("guard_digits", -1), ("jobs", 0), ("identity_max_n", 0), ("log_level", "LOUD")],
)
def test_settings_validation(field, value):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **{field: value})


def test_parse_primes():
    assert parse_primes("5..13") == [5, 7, 11, 13]
    assert parse_primes("1..10") == [3, 5, 7]
    assert parse_primes(" 7 ") == [7]
    assert parse_primes("24..28") == []


@pytest.mark.parametrize("text", ["9", "13..5", "abc", "5..", "5..2000"])
def test_parse_primes_rejects(text):
    with pytest.raises(PreconditionViolated):
        parse_primes(text, max_prime=997)


def test_parse_primes_custom_maximum():
    with pytest.raises(PreconditionViolated):
        parse_primes("5..50", max_prime=31)


def test_case_descriptor_validation():
    base = dict(id="X-1", kind="numeric", modulus_exponent=1, condition="p>3", guard=2, anchor="")
    with pytest.raises(ValidationError):
        CaseDescriptor(family="XYZ", **base)
    with pytest.raises(ValidationError):
        CaseDescriptor(**{**base, "family": "SV", "kind": "matrix"})
    assert CaseDescriptor(family="SV", **base).notes == ""


def test_summary_alias():
    s = Summary(passed=3)
    assert s.model_dump(by_alias=True) == {"pass": 3, "fail": 0, "skipped": 0}
    assert Summary.model_validate({"pass": 2}).passed == 2


def test_report_build_groups_families():
    results = [
        CaseResult(id="SV-I2", p=7, status="pass", modulus_exponent=1),
        CaseResult(id="GEN-C3", p=7, status="fail", modulus_exponent=1),
        CaseResult(id="GEN-C3", p=5, status="pass", modulus_exponent=1),
    ]
    report = Report.build(results, version="1.0")
    assert [(r.id, r.p) for r in report.cases] == [("GEN-C3", 5), ("GEN-C3", 7), ("SV-I2", 7)]
    assert report.summary == Summary(passed=2, fail=1)
    assert report.families["GEN"] == Summary(passed=1, fail=1)
    assert not report.ok
    assert report.model_dump(by_alias=True)["schema"] == 1
