"""Allowlists for case families, case kinds and CLI choices"""

from typing import Final

FAMILIES: Final[frozenset[str]] = frozenset({"GEN", "SV", "MAIN", "NUM", "AUX"})

CASE_KINDS: Final[frozenset[str]] = frozenset({"polynomial", "numeric", "quad-numeric"})

COMPUTE_TARGETS: Final[frozenset[str]] = frozenset(
    {
        "polylog",
        "bernoulli",
        "euler",
        "fermat-quotient",
        "lucas-quotient",
        "harmonic",
        "central-binomial-sum",
    }
)

OUTPUT_FORMATS: Final[frozenset[str]] = frozenset({"text", "json"})

__all__ = ["FAMILIES", "CASE_KINDS", "COMPUTE_TARGETS", "OUTPUT_FORMATS"]
