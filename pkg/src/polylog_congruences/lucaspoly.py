"""Lucas sequences ``u_n(x, y)`` and ``v_n(x, y)`` over any ring.

    u_0 = 0, u_1 = 1, v_0 = 2, v_1 = x
    w_n = x * w_{n-1} - y * w_{n-2}

With ``y = 1`` these are the Chebyshev-type polynomials ``u_n(x)``, ``v_n(x)``.
Terms are always produced by the recurrence, never by closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Literal, Sequence

from polylog_congruences.arith import PadicContext
from polylog_congruences.errors import PreconditionViolated
from polylog_congruences.rings import DensePoly, RationalField

LucasKind = Literal["u", "v"]


def lucas_terms(kind: LucasKind, n: int, x: Any, y: Any = 1) -> list[Any]:
    """``[w_0, ..., w_n]`` in the ring of ``x`` and ``y``."""
    if n < 0:
        raise PreconditionViolated(f"n must be >= 0, got {n}")
    zero = x * 0
    if kind == "u":
        terms = [zero, zero + 1]
    elif kind == "v":
        terms = [zero + 2, x]
    else:
        raise PreconditionViolated(f"Unknown Lucas kind '{kind}'")
    for _ in range(2, n + 1):
        terms.append(x * terms[-1] - y * terms[-2])
    return terms[: n + 1]


@dataclass(frozen=True)
class LucasSeq:
    kind: LucasKind
    x: Any
    y: Any = 1

    def terms(self, n: int) -> list[Any]:
        return lucas_terms(self.kind, n, self.x, self.y)

    def __getitem__(self, n: int) -> Any:
        return self.terms(n)[n]


def lucas_eval(kind: LucasKind, n: int, x: Any, y: Any = 1) -> Any:
    return lucas_terms(kind, n, x, y)[n]


def u_poly(n: int) -> DensePoly:
    return lucas_eval("u", n, DensePoly.x(RationalField()))


def v_poly(n: int) -> DensePoly:
    return lucas_eval("v", n, DensePoly.x(RationalField()))


def weighted_sum(terms: Sequence[Any], d: int, ctx: PadicContext) -> Any:
    """``sum_{k=1}^{p-1} terms[k] * k**-d`` with weights from the context's inverse table."""
    p = ctx.p
    if len(terms) < p:
        raise PreconditionViolated(f"need terms up to index {p - 1}, got {len(terms) - 1}")
    weights = ctx.inverse_powers(d)
    total = terms[1] * ctx.unit(weights[1])
    for k in range(2, p):
        total = total + terms[k] * ctx.unit(weights[k])
    return total


def lucas_weighted_sum(kind: LucasKind, d: int, x: Any, ctx: PadicContext, y: Any = 1) -> Any:
    """``sum_{k=1}^{p-1} w_k(x, y) / k**d``."""
    return weighted_sum(lucas_terms(kind, ctx.p - 1, x, y), d, ctx)
