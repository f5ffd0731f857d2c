import pytest

from polylog_congruences.errors import PreconditionViolated, UnknownCase
from polylog_congruences.identities import (
    IDENTITIES,
    get_identity,
    list_identities,
    verify_identity,
)


def test_registry_ids_are_prefixed():
    ids = [case.id for case in list_identities()]
    assert len(ids) == len(set(ids))
    assert all(i.startswith("ID-") for i in ids)
    for expected in ("ID-I1", "ID-I3", "ID-RE", "ID-GINV", "ID-CB4"):
        assert expected in IDENTITIES


@pytest.mark.parametrize("case", [c for c in IDENTITIES.values() if not c.uses_s], ids=lambda c: c.id)
@pytest.mark.parametrize("n", [1, 2, 3, 4, 7])
def test_identity_holds(case, n):
    verdict = verify_identity(case.id, n)
    assert verdict.passed, verdict.residual
    assert verdict.checked >= 1


@pytest.mark.parametrize("case", [c for c in IDENTITIES.values() if c.uses_s], ids=lambda c: c.id)
@pytest.mark.parametrize("n", [1, 2, 5])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_weighted_identity_holds(case, n, s):
    verdict = verify_identity(case.id, n, s)
    assert verdict.passed, verdict.residual
    assert verdict.s == s


def test_recurrence_checks_every_depth():
    verdict = verify_identity("ID-RE", 3, 1)
    # three depths, plain and harmonic-weighted
    assert verdict.checked == 6


def test_central_binomial_quarter_sum_at_zero():
    assert verify_identity("ID-CB4", 0).passed


def test_empty_convolution_sum_at_one():
    # both sides are empty sums
    assert verify_identity("ID-I8", 1).passed


def test_minimum_n_is_enforced():
    with pytest.raises(PreconditionViolated):
        verify_identity("ID-I1", 0)
    with pytest.raises(PreconditionViolated):
        verify_identity("ID-CB4", -1)


def test_anchors_are_source_phrases():
    assert get_identity("ID-I8").anchor == "which was also proved in"
    assert get_identity("ID-I3").anchor == get_identity("ID-I4").anchor
    assert all(case.notes for case in IDENTITIES.values())


@pytest.mark.slow
@pytest.mark.parametrize("case", [c for c in IDENTITIES.values() if not c.uses_s], ids=lambda c: c.id)
def test_identity_holds_up_to_25(case):
    for n in range(max(case.min_n, 1), 26):
        verdict = verify_identity(case.id, n)
        assert verdict.passed, (n, verdict.residual)


@pytest.mark.slow
@pytest.mark.parametrize("case", [c for c in IDENTITIES.values() if c.uses_s], ids=lambda c: c.id)
@pytest.mark.parametrize("s", [1, 2, 3])
def test_weighted_identity_holds_up_to_25(case, s):
    for n in range(max(case.min_n, 1), 26):
        verdict = verify_identity(case.id, n, s)
        assert verdict.passed, (n, verdict.residual)


def test_weight_is_required():
    with pytest.raises(PreconditionViolated):
        verify_identity("ID-I6", 3)
    with pytest.raises(PreconditionViolated):
        verify_identity("ID-I6", 3, 0)


def test_unknown_identity():
    with pytest.raises(UnknownCase):
        get_identity("ID-NOPE")
    with pytest.raises(UnknownCase):
        verify_identity("ID-NOPE", 2)
