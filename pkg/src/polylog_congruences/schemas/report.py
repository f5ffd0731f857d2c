"""Verification result and report schemas"""

from collections import Counter
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

REPORT_SCHEMA_VERSION = 1


class Witness(BaseModel):
    """First mismatching residue of a failed comparison"""

    label: str
    index: int
    lhs: int
    rhs: int
    modulus_exponent: int


class CaseResult(BaseModel):
    id: str
    p: int
    status: Literal["pass", "fail", "skipped"]
    modulus_exponent: int
    witness: Witness | None = None
    error: str | None = None
    micros: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def family(self) -> str:
        return self.id.split("-", 1)[0]


class Summary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, alias="pass")
    fail: int = 0
    skipped: int = 0


class Report(BaseModel):
    """Unified report for one verification run"""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(REPORT_SCHEMA_VERSION, alias="schema")
    version: str
    timestamp: str | None = None
    cases: list[CaseResult]
    summary: Summary
    families: dict[str, Summary] = {}

    @classmethod
    def build(
        cls, results: list[CaseResult], version: str, timestamp: str | None = None
    ) -> "Report":
        ordered = sorted(results, key=lambda r: (r.id, r.p))
        families: dict[str, Counter] = {}
        for r in ordered:
            families.setdefault(r.family, Counter())[r.status] += 1
        return cls(
            version=version,
            timestamp=timestamp,
            cases=ordered,
            summary=_summary(Counter(r.status for r in ordered)),
            families={name: _summary(counts) for name, counts in sorted(families.items())},
        )

    @property
    def ok(self) -> bool:
        return self.summary.fail == 0


def _summary(counts: Counter) -> Summary:
    return Summary(passed=counts["pass"], fail=counts["fail"], skipped=counts["skipped"])
