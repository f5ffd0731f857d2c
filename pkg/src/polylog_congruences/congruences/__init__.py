"""Executable congruence cases, registered by family on import."""

from polylog_congruences.congruences import (  # noqa: F401
    auxiliary,
    consistency,
    general,
    main,
    numeric,
    special_values,
)
from polylog_congruences.congruences.registry import REGISTRY, get_case, list_cases
from polylog_congruences.congruences.verification import verify_case

__all__ = ["REGISTRY", "get_case", "list_cases", "verify_case"]
