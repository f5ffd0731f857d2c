import json

import pytest
from click.testing import CliRunner

from polylog_congruences.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "polylog-congruences" in result.output


def test_verify_json(runner):
    result = runner.invoke(
        main, ["verify", "--case", "GEN-C3", "--primes", "5..13", "--format", "json", "--no-timings"]
    )
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["schema"] == 1
    assert report["timestamp"] is None
    assert report["summary"] == {"pass": 4, "fail": 0, "skipped": 0}
    assert [c["p"] for c in report["cases"]] == [5, 7, 11, 13]


def test_verify_text_with_family(runner):
    result = runner.invoke(main, ["verify", "--family", "AUX", "--primes", "7..11", "--jobs", "2"])
    assert result.exit_code == 0, result.output
    assert "PASS    AUX-WOLST" in result.stdout
    assert "0 failed" in result.stdout


def test_verify_records_skips(runner):
    result = runner.invoke(main, ["verify", "--case", "SV-THMPHI", "--primes", "5..7"])
    assert result.exit_code == 0, result.output
    assert "SKIPPED SV-THMPHI" in result.stdout
    assert "1 passed, 0 failed, 1 skipped" in result.stdout


def test_verify_unknown_case(runner):
    result = runner.invoke(main, ["verify", "--case", "NO-SUCH", "--primes", "5"])
    assert result.exit_code == 2
    assert "Unknown case" in result.output


@pytest.mark.parametrize("primes", ["9", "13..5", "5..100000"])
def test_verify_bad_prime_range(runner, primes):
    result = runner.invoke(main, ["verify", "--case", "GEN-C3", "--primes", primes])
    assert result.exit_code == 2


def test_list_family(runner):
    result = runner.invoke(main, ["list", "--family", "SV"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines and all(line.startswith("SV-") for line in lines)


def test_list_json(runner):
    result = runner.invoke(main, ["list", "--format", "json"])
    assert result.exit_code == 0
    ids = {d["id"] for d in json.loads(result.stdout)}
    assert {"GEN-C3", "MAIN-CC1", "NUM-SUN-2", "AUX-EB"} <= ids


@pytest.mark.parametrize(
    "args,expected",
    [
        (["fermat-quotient", "2", "7"], "2"),
        (["fermat-quotient", "2", "7", "--mod-exp", "2"], "9"),
        (["bernoulli", "2", "7"], "6"),
        (["euler", "2", "7"], "6"),
        (["polylog", "1", "1", "5", "--mod-exp", "2"], "0 (valuation 2)"),
        (["harmonic", "4", "1", "5"], "0 (valuation 2)"),
        (["harmonic", "5", "1", "5"], "1/5^1 (valuation -1)"),
    ],
)
def test_compute(runner, args, expected):
    result = runner.invoke(main, ["compute", *args])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == expected


@pytest.mark.parametrize(
    "args",
    [
        ["bernoulli", "2", "9"],
        ["bernoulli", "2"],
        ["polylog", "1", "x", "7"],
        ["bernoulli", "12", "7"],
        ["nonsense", "7"],
    ],
)
def test_compute_rejects(runner, args):
    result = runner.invoke(main, ["compute", *args])
    assert result.exit_code == 2


def test_identities(runner):
    result = runner.invoke(main, ["identities", "--case", "ID-I1", "--n-max", "5"])
    assert result.exit_code == 0, result.output
    assert "5 passed, 0 failed" in result.stdout


def test_identities_weighted_json(runner):
    result = runner.invoke(
        main, ["identities", "--case", "ID-I6", "--n-max", "3", "--s-max", "2", "--format", "json"]
    )
    assert result.exit_code == 0, result.output
    outcomes = json.loads(result.stdout)
    assert len(outcomes) == 6
    assert {o["s"] for o in outcomes} == {1, 2}
    assert all(o["status"] == "pass" for o in outcomes)


def test_identities_unknown(runner):
    result = runner.invoke(main, ["identities", "--case", "ID-NOPE"])
    assert result.exit_code == 2


def test_info(runner):
    result = runner.invoke(main, ["info"])
    assert result.exit_code == 0
    assert "Version:" in result.stdout
    assert "Registered cases:" in result.stdout
    assert "MAIN:" in result.stdout
