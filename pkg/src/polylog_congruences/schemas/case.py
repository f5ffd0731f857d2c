"""Case catalogue schemas"""

from pydantic import BaseModel, field_validator

from polylog_congruences.utils.allowlists import CASE_KINDS, FAMILIES


class CaseDescriptor(BaseModel):
    id: str
    family: str
    kind: str
    modulus_exponent: int
    condition: str
    guard: int
    anchor: str
    notes: str = ""

    @field_validator("family")
    @classmethod
    def _known_family(cls, v: str) -> str:
        if v not in FAMILIES:
            raise ValueError(f"Unknown family '{v}'. Allowed: {sorted(FAMILIES)}")
        return v

    @field_validator("kind")
    @classmethod
    def _known_kind(cls, v: str) -> str:
        if v not in CASE_KINDS:
            raise ValueError(f"Unknown kind '{v}'. Allowed: {sorted(CASE_KINDS)}")
        return v


class IdentityOutcome(BaseModel):
    id: str
    n: int
    s: int | None = None
    status: str  # "pass" or "fail"
    pairs_checked: int
    residual: str | None = None
