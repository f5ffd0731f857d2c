import logging

import pytest

from polylog_congruences.__version__ import __version__
from polylog_congruences.congruences import REGISTRY
from polylog_congruences.congruences.registry import CongruenceCase, PrimeCondition
from polylog_congruences.errors import PrecisionExhausted, UnknownCase
from polylog_congruences.schemas.report import Report
from polylog_congruences.services.sweep import verify_sweep


def test_empty_sweep():
    report = verify_sweep([], [5, 7], jobs=1, timings=False)
    assert report.cases == []
    assert report.summary.passed == report.summary.fail == report.summary.skipped == 0
    assert report.ok


def test_unknown_case_is_rejected_before_running():
    with pytest.raises(UnknownCase):
        verify_sweep(["GEN-C3", "GEN-NOPE"], [5])


def test_skipped_primes_are_recorded():
    report = verify_sweep(["SV-THMPHI"], [5, 7], jobs=1, timings=False)
    statuses = {r.p: r.status for r in report.cases}
    assert statuses == {5: "skipped", 7: "pass"}
    assert report.summary.skipped == 1
    assert report.families["SV"].skipped == 1
    assert report.ok


def test_skips_log_quietly_with_case_and_prime(caplog):
    with caplog.at_level(logging.DEBUG, logger="polylog_congruences.services.sweep"):
        verify_sweep(["SV-THMPHI"], [5], jobs=1, timings=False)
    (record,) = [r for r in caplog.records if "Skipping" in r.getMessage()]
    assert record.levelno == logging.DEBUG
    assert "SV-THMPHI" in record.getMessage()
    assert "p=5" in record.getMessage()
    assert record.case_id == "SV-THMPHI"


def test_report_is_sorted_by_case_then_prime():
    report = verify_sweep(["GEN-C3", "AUX-WOLST"], [11, 5, 7], jobs=1, timings=False)
    keys = [(r.id, r.p) for r in report.cases]
    assert keys == sorted(keys)
    assert report.summary.passed == 6
    assert set(report.families) == {"AUX", "GEN"}


def test_timings_off_is_reproducible():
    report = verify_sweep(["AUX-WOLST"], [5, 7], jobs=1, timings=False)
    assert report.timestamp is None
    assert all(r.micros == 0 for r in report.cases)
    assert report.version == __version__


def test_timings_on_sets_timestamp():
    report = verify_sweep(["AUX-WOLST"], [5], jobs=1, timings=True)
    assert report.timestamp is not None


def test_parallel_matches_serial():
    ids = ["GEN-C2", "NUM-SUN-1", "SV-THMI", "AUX-EB"]
    primes = [5, 7, 11, 13]
    serial = verify_sweep(ids, primes, jobs=1, timings=False)
    parallel = verify_sweep(ids, primes, jobs=3, timings=False)
    assert parallel.model_dump() == serial.model_dump()


def test_evaluator_errors_become_failures(monkeypatch):
    def evaluate(ctx):
        raise PrecisionExhausted("out of digits")

    case = CongruenceCase(
        id="AUX-EXPLODES",
        family="AUX",
        kind="numeric",
        modulus_exponent=1,
        condition=PrimeCondition(),
        anchor="",
        evaluate=evaluate,
    )
    monkeypatch.setitem(REGISTRY, case.id, case)
    report = verify_sweep([case.id], [7], jobs=1, timings=False)
    (result,) = report.cases
    assert result.status == "fail"
    assert result.error == "PrecisionExhausted: out of digits"
    assert not report.ok


def test_json_round_trip():
    report = verify_sweep(["GEN-C3", "SV-THMPHI"], [5, 7], jobs=1, timings=False)
    text = report.model_dump_json(by_alias=True)
    assert '"schema":1' in text
    assert '"pass":' in text
    assert Report.model_validate_json(text) == report
