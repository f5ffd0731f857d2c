"""Evaluation of a single (case, prime) pair."""

from __future__ import annotations

import logging
import time

from polylog_congruences.arith import PadicContext
from polylog_congruences.congruences.registry import (
    first_mismatch,
    get_case,
    min_valuation,
    residues,
)
from polylog_congruences.errors import NegativeValuation, PrimeConditionViolated
from polylog_congruences.schemas.report import CaseResult, Witness
from polylog_congruences.settings import settings

logger = logging.getLogger(__name__)


def verify_case(id: str, p: int, guard_digits: int | None = None) -> CaseResult:
    """Evaluate both sides of case ``id`` at the prime ``p`` and compare them.

    Raises :class:`PrimeConditionViolated` when ``p`` is outside the case's
    range of validity. Left-hand sides of MAIN cases must be p-integral
    and raise :class:`NegativeValuation` otherwise. Arithmetic errors
    propagate; a precision error on a passing case indicates a bug in the
    evaluator.
    """
    case = get_case(id)
    if not case.condition.admits(p):
        raise PrimeConditionViolated(
            f"Case {id} requires {case.condition.describe()}, got p={p}"
        )
    guard = max(case.guard, settings.guard_digits if guard_digits is None else guard_digits)
    start = time.perf_counter_ns()
    ctx = PadicContext(p, k=case.modulus_exponent, g=guard)
    witness = None
    for comparison in case.evaluate(ctx):
        j = comparison.exponent
        if case.family == "MAIN":
            v = min_valuation(comparison.lhs, p)
            if v < 0:
                raise NegativeValuation(
                    f"Left-hand side '{comparison.label}' of {id} has {p}-adic valuation {v}"
                )
        lhs = residues(comparison.lhs, p, j)
        rhs = residues(comparison.rhs, p, j)
        index = first_mismatch(lhs, rhs)
        if index is not None:
            witness = Witness(
                label=comparison.label,
                index=index,
                lhs=lhs[index] if index < len(lhs) else 0,
                rhs=rhs[index] if index < len(rhs) else 0,
                modulus_exponent=j,
            )
            break
    micros = (time.perf_counter_ns() - start) // 1000
    status = "pass" if witness is None else "fail"
    logger.debug(
        "Case evaluated",
        extra={"case_id": id, "p": p, "status": status, "micros": micros},
    )
    return CaseResult(
        id=id,
        p=p,
        status=status,
        modulus_exponent=case.modulus_exponent,
        witness=witness,
        micros=micros,
    )
