from fractions import Fraction

import pytest
from sympy import primerange

from polylog_congruences.arith import PadicApprox, PadicContext
from polylog_congruences.congruences import REGISTRY, get_case, list_cases, verify_case
from polylog_congruences.congruences.consistency import LATTICE, consistency_lattice
from polylog_congruences.congruences.registry import (
    CongruenceCase,
    PrimeCondition,
    comparisons,
    first_mismatch,
    min_valuation,
    residues,
)
from polylog_congruences.errors import NegativeValuation, PrimeConditionViolated, UnknownCase
from polylog_congruences.rings import DensePoly, RationalField, gaussian
from polylog_congruences.services.sweep import verify_sweep
from polylog_congruences.utils.allowlists import CASE_KINDS, FAMILIES

NUMERIC_PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31]
PRIMES_BY_FAMILY = {
    "GEN": [3, 5, 7, 11, 13],
    "MAIN": [5, 7, 11],
    "SV": NUMERIC_PRIMES,
    "NUM": NUMERIC_PRIMES,
    "AUX": NUMERIC_PRIMES,
}
FULL_RANGE = {"GEN": 199, "SV": 499, "MAIN": 97, "NUM": 997, "AUX": 499}
# the lattice evaluates MAIN polynomials
FULL_RANGE_OVERRIDES = {"NUM-LATTICE": 97}


def _pairs():
    for case in REGISTRY.values():
        for p in PRIMES_BY_FAMILY[case.family]:
            if case.condition.admits(p):
                yield pytest.param(case.id, p, id=f"{case.id}-p{p}")


def test_registry_is_consistent():
    for id, case in REGISTRY.items():
        assert case.id == id
        assert case.family in FAMILIES
        assert case.kind in CASE_KINDS
        assert case.modulus_exponent >= 1
        assert id.startswith(case.family + "-")
    assert {c.family for c in list_cases()} == FAMILIES


def test_known_cases_are_registered():
    for id in ("GEN-C3", "GEN-C1C", "MAIN-CC1", "MAIN-SWITCH", "SV-THMI", "NUM-SUN-2", "NUM-LATTICE", "AUX-GLAISHER"):
        assert get_case(id).id == id


def test_list_cases_by_family():
    sv = list_cases("SV")
    assert sv and all(c.family == "SV" for c in sv)
    assert list_cases("NOPE") == []


def test_descriptor_matches_case():
    case = get_case("MAIN-CC7")
    d = case.descriptor()
    assert d.id == "MAIN-CC7"
    assert d.family == "MAIN"
    assert d.kind == "polynomial"
    assert d.modulus_exponent == 3
    assert d.condition == "p>3"


def test_unknown_case():
    with pytest.raises(UnknownCase):
        get_case("GEN-NOPE")
    with pytest.raises(UnknownCase):
        verify_case("GEN-NOPE", 7)


@pytest.mark.parametrize("id,p", list(_pairs()))
def test_case_holds(id, p):
    result = verify_case(id, p)
    assert result.status == "pass", result.witness
    assert result.witness is None
    assert result.modulus_exponent == get_case(id).modulus_exponent
    assert result.micros is not None and result.micros >= 0


@pytest.mark.slow
@pytest.mark.parametrize("id", sorted(REGISTRY))
def test_case_holds_across_full_range(id):
    case = get_case(id)
    upper = FULL_RANGE_OVERRIDES.get(id, FULL_RANGE[case.family])
    report = verify_sweep([id], list(primerange(5, upper + 1)), jobs=1, timings=False)
    failures = [(r.p, r.witness, r.error) for r in report.cases if r.status == "fail"]
    assert not failures
    assert report.summary.passed > 0


def test_extra_guard_digits_do_not_change_verdict():
    assert verify_case("GEN-C2", 7, guard_digits=6).passed
    assert verify_case("NUM-SUN-1", 11, guard_digits=5).passed


def test_prime_condition_is_enforced():
    with pytest.raises(PrimeConditionViolated):
        verify_case("SV-THMPHI", 5)
    with pytest.raises(PrimeConditionViolated):
        verify_case("MAIN-CC1", 3)
    assert verify_case("GEN-EQQ", 3).passed


@pytest.mark.parametrize("id", ["GEN-L2", "GEN-GVAR"])
def test_dilogarithm_square_cases_exclude_three(id):
    # the constant term -H_(p-1)(2) vanishes mod p only for p > 3
    assert get_case(id).condition.describe() == "p>3"
    with pytest.raises(PrimeConditionViolated):
        verify_case(id, 3)
    report = verify_sweep([id], [3, 5], jobs=1, timings=False)
    assert [r.status for r in report.cases] == ["skipped", "pass"]


def test_prime_condition():
    condition = PrimeCondition(greater_than=3, coprime_to=(6, 10))
    assert condition.admits(7)
    assert not condition.admits(5)
    assert not condition.admits(3)
    assert condition.describe() == "p>3, p∤6, p∤10"


def test_residues_flatten_values():
    ctx = PadicContext(7, k=1)
    QQ = RationalField()
    poly = DensePoly([Fraction(1, 2), 3], QQ)
    assert residues(poly, 7, 1) == [4, 3]
    assert residues([ctx.of(8), Fraction(1, 3)], 7, 1) == [1, 5]
    z = gaussian(QQ).element(2, Fraction(1, 2))
    assert residues(z, 7, 1) == [2, 4]


def test_first_mismatch():
    assert first_mismatch([1, 2, 3], [1, 2, 3]) is None
    assert first_mismatch([1, 2], [1, 5]) == 1
    # missing entries read as zero
    assert first_mismatch([1, 2, 0], [1, 2]) is None
    assert first_mismatch([1], [1, 4]) == 1


def test_failing_case_reports_witness(monkeypatch):
    def evaluate(ctx):
        return comparisons(
            [("same", ctx.of(3), 3), ("different", DensePoly([1, 2], RationalField()), [1, 9])],
            1,
        )

    case = CongruenceCase(
        id="AUX-BROKEN",
        family="AUX",
        kind="numeric",
        modulus_exponent=1,
        condition=PrimeCondition(),
        anchor="",
        evaluate=evaluate,
    )
    monkeypatch.setitem(REGISTRY, case.id, case)
    result = verify_case(case.id, 11)
    assert result.status == "fail"
    assert result.witness.label == "different"
    assert result.witness.index == 1
    assert (result.witness.lhs, result.witness.rhs) == (2, 9)


@pytest.mark.parametrize("p", [7, 11, 13])
def test_consistency_lattice_edges_agree(p):
    ctx = PadicContext(p, k=3, g=3)
    checked = consistency_lattice(ctx)
    assert checked
    assert len(checked) <= len(LATTICE)
    assert verify_case("NUM-LATTICE", p).passed


def test_min_valuation():
    ctx = PadicContext(7, k=2)
    QQ = RationalField()
    assert min_valuation(ctx.of(Fraction(49, 3)), 7) == 2
    assert min_valuation(DensePoly([Fraction(1, 7), 14], QQ), 7) == -1
    assert min_valuation(gaussian(QQ).element(0, 21), 7) == 1
    assert min_valuation([0, PadicApprox.zero(ctx)], 7) == float("inf")


def test_main_left_side_must_be_integral(monkeypatch):
    def evaluate(ctx):
        return comparisons([("t^0", [ctx.of(Fraction(1, ctx.p))], [0])], 1)

    case = CongruenceCase(
        id="MAIN-POLE",
        family="MAIN",
        kind="polynomial",
        modulus_exponent=1,
        condition=PrimeCondition(),
        anchor="",
        evaluate=evaluate,
    )
    monkeypatch.setitem(REGISTRY, case.id, case)
    with pytest.raises(NegativeValuation, match="Left-hand side 't\\^0' of MAIN-POLE"):
        verify_case(case.id, 7)
    report = verify_sweep([case.id], [7], jobs=1, timings=False)
    assert report.cases[0].status == "fail"
    assert report.cases[0].error.startswith("NegativeValuation: Left-hand side")


@pytest.mark.parametrize(
    "id,p,labels",
    [
        ("SV-L1-ODD", 5, ["d=1"]),
        ("SV-L1-ODD", 7, ["d=1", "d=3"]),
        ("SV-L1-EVEN", 5, ["d=2"]),
        ("SV-L1-EVEN", 7, ["d=2", "d=4"]),
    ],
)
def test_glaisher_cases_record_checked_indices(id, p, labels):
    case = get_case(id)
    ctx = PadicContext(p, k=case.modulus_exponent, g=case.guard)
    assert [c.label for c in case.evaluate(ctx)] == labels
    assert "p>5" in case.descriptor().notes
