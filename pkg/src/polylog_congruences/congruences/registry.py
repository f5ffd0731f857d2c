"""Registry of congruence cases.

A case evaluates both sides for one prime and returns a list of
:class:`Comparison` records; each record is compared modulo ``p**j``
after flattening both sides to residues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from polylog_congruences.arith import PadicApprox, PadicContext, reduce, valuation
from polylog_congruences.errors import PreconditionViolated, UnknownCase
from polylog_congruences.rings import DensePoly, QuadElem, ResidueRing
from polylog_congruences.schemas.case import CaseDescriptor
from polylog_congruences.utils.allowlists import CASE_KINDS, FAMILIES


@dataclass(frozen=True)
class PrimeCondition:
    greater_than: int = 3
    coprime_to: tuple[int, ...] = ()

    def admits(self, p: int) -> bool:
        return p > self.greater_than and all(m % p for m in self.coprime_to)

    def describe(self) -> str:
        parts = [f"p>{self.greater_than}"]
        parts.extend(f"p∤{m}" for m in self.coprime_to)
        return ", ".join(parts)


@dataclass
class Comparison:
    label: str
    lhs: Any
    rhs: Any
    exponent: int


@dataclass(frozen=True)
class CongruenceCase:
    id: str
    family: str
    kind: str
    modulus_exponent: int
    condition: PrimeCondition
    anchor: str
    evaluate: Callable[[PadicContext], list[Comparison]] = field(repr=False)
    guard: int = 2
    notes: str = ""

    def descriptor(self) -> CaseDescriptor:
        return CaseDescriptor(
            id=self.id,
            family=self.family,
            kind=self.kind,
            modulus_exponent=self.modulus_exponent,
            condition=self.condition.describe(),
            guard=self.guard,
            anchor=self.anchor,
            notes=self.notes,
        )


REGISTRY: dict[str, CongruenceCase] = {}


def congruence(
    id: str,
    *,
    kind: str,
    exponent: int,
    anchor: str,
    greater_than: int = 3,
    coprime_to: tuple[int, ...] = (),
    guard: int = 2,
    notes: str = "",
):
    """Register a case evaluator under a stable id (family is the id prefix)"""
    family = id.split("-", 1)[0]
    if family not in FAMILIES:
        raise PreconditionViolated(f"Unknown family '{family}' for case {id}")
    if kind not in CASE_KINDS:
        raise PreconditionViolated(f"Unknown kind '{kind}' for case {id}")

    def decorator(func: Callable[[PadicContext], list[Comparison]]):
        if id in REGISTRY:
            raise PreconditionViolated(f"Case {id} registered twice")
        REGISTRY[id] = CongruenceCase(
            id=id,
            family=family,
            kind=kind,
            modulus_exponent=exponent,
            condition=PrimeCondition(greater_than, coprime_to),
            anchor=anchor,
            evaluate=func,
            guard=guard,
            notes=notes,
        )
        return func

    return decorator


def list_cases(family: str | None = None) -> list[CongruenceCase]:
    return [c for c in REGISTRY.values() if family is None or c.family == family]


def get_case(id: str) -> CongruenceCase:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownCase(f"Unknown case '{id}'. Allowed: {', '.join(REGISTRY)}") from None


def residues(value: Any, p: int, j: int) -> list[int]:
    """Flatten a value into its residues modulo ``p**j``."""
    if isinstance(value, PadicApprox):
        return [reduce(value, j)]
    if isinstance(value, QuadElem):
        return residues(value.a, p, j) + residues(value.b, p, j)
    if isinstance(value, DensePoly):
        return [r for c in value.coefficients for r in residues(c, p, j)]
    if isinstance(value, (list, tuple)):
        return [r for item in value for r in residues(item, p, j)]
    if isinstance(value, (int, Fraction)):
        return [ResidueRing(p**j).coerce(value)]
    raise PreconditionViolated(f"cannot reduce a {type(value).__name__}")


def min_valuation(value: Any, p: int) -> float | int:
    """Smallest p-adic valuation among the entries of a value; zero entries count as infinite."""
    if isinstance(value, PadicApprox):
        if value.is_exact_zero:
            return float("inf")
        return value.v
    if isinstance(value, QuadElem):
        return min(min_valuation(value.a, p), min_valuation(value.b, p))
    if isinstance(value, DensePoly):
        return min_valuation(list(value.coefficients), p)
    if isinstance(value, (list, tuple)):
        return min((min_valuation(item, p) for item in value), default=float("inf"))
    if isinstance(value, (int, Fraction)):
        return valuation(value, p) if value else float("inf")
    raise PreconditionViolated(f"cannot take the valuation of a {type(value).__name__}")


def first_mismatch(lhs: Sequence[int], rhs: Sequence[int]) -> int | None:
    size = max(len(lhs), len(rhs))
    for i in range(size):
        a = lhs[i] if i < len(lhs) else 0
        b = rhs[i] if i < len(rhs) else 0
        if a != b:
            return i
    return None


def comparisons(pairs: Iterable[tuple[str, Any, Any]], exponent: int) -> list[Comparison]:
    return [Comparison(label, lhs, rhs, exponent) for label, lhs, rhs in pairs]
