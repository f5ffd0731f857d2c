"""Sweeps of (case, prime) pairs over a worker pool"""

import logging
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Iterable, Sequence

from polylog_congruences.__version__ import __version__
from polylog_congruences.congruences import get_case, verify_case
from polylog_congruences.schemas.report import CaseResult, Report
from polylog_congruences.settings import settings

logger = logging.getLogger(__name__)


def _execute_case(id: str, p: int) -> CaseResult:
    """Run one pair, converting evaluator errors into a failed result"""
    case = get_case(id)
    if not case.condition.admits(p):
        logger.debug(
            f"Skipping {id} at p={p}: requires {case.condition.describe()}",
            extra={"case_id": id, "p": p, "condition": case.condition.describe()},
        )
        return CaseResult(id=id, p=p, status="skipped", modulus_exponent=case.modulus_exponent)
    try:
        return verify_case(id, p)
    except Exception as e:
        logger.error(
            f"Case {id} failed at p={p}",
            extra={"case_id": id, "p": p, "error": str(e), "error_type": type(e).__name__},
            exc_info=True,
        )
        return CaseResult(
            id=id,
            p=p,
            status="fail",
            modulus_exponent=case.modulus_exponent,
            error=f"{type(e).__name__}: {e}",
        )


def verify_sweep(
    ids: Sequence[str],
    primes: Iterable[int],
    jobs: int | None = None,
    timings: bool | None = None,
) -> Report:
    """Verify every case in ``ids`` at every prime; the report is sorted by (id, p)"""
    jobs = jobs or settings.jobs
    timings = settings.report_timings if timings is None else timings
    for id in ids:
        get_case(id)
    pairs = [(id, p) for id in ids for p in primes]
    logger.info("Starting sweep", extra={"cases": len(ids), "pairs": len(pairs), "jobs": jobs})

    if jobs == 1:
        results = [_execute_case(id, p) for id, p in pairs]
    else:
        with ThreadPoolExecutor(max_workers=jobs, thread_name_prefix="sweep") as pool:
            results = list(pool.map(lambda pair: _execute_case(*pair), pairs))

    if not timings:
        results = [r.model_copy(update={"micros": 0}) for r in results]
    report = Report.build(
        results,
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat() if timings else None,
    )
    logger.info(
        "Sweep finished",
        extra={
            "pass": report.summary.passed,
            "fail": report.summary.fail,
            "skipped": report.summary.skipped,
        },
    )
    return report
