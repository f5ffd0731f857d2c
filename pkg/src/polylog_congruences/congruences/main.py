"""Polynomial congruences in ``t`` for sums involving central binomial coefficients.

Each case is written once against a :class:`TVariable`, which is either the
indeterminate ``t`` (polynomials over p-adic coefficients) or a rational
point. Lucas polynomials and the closed parts of the right-hand sides are
built exactly over the rationals and lifted to p-adic numbers afterwards;
only the harmonic-type sums run in truncated arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Any, Callable

from polylog_congruences.arith import PadicContext
from polylog_congruences.congruences.registry import Comparison, comparisons, congruence
from polylog_congruences.errors import UnknownCase
from polylog_congruences.lucaspoly import lucas_terms, weighted_sum
from polylog_congruences.rings import DensePoly, PadicDomain, RationalField

ANCHOR_CC = "we have the polynomial congruences"
ANCHOR_LAST = "The general scheme of proof"
HALF = Fraction(1, 2)


class TVariable:
    """The parameter ``t``: symbolic when ``value`` is None, otherwise a rational point."""

    def __init__(self, ctx: PadicContext, value: int | Fraction | None = None):
        self.ctx = ctx
        self.p = ctx.p
        self.domain = PadicDomain(ctx)
        self.symbolic = value is None
        self.t: Any = DensePoly.x(RationalField()) if value is None else Fraction(value)
        self._lifted_tables: dict[str, list[Any]] = {}

    def lift(self, exact: Any) -> Any:
        if isinstance(exact, DensePoly):
            return exact.change_domain(self.domain)
        return self.ctx.of(exact)

    @cached_property
    def lifted_t(self) -> Any:
        return self.lift(self.t)

    def series(self, coefficients: dict[int, Any]) -> Any:
        """``sum c_k t**k`` for p-adic coefficients ``c_k``."""
        if self.symbolic:
            top = max(coefficients, default=0)
            dense = [coefficients.get(k, self.domain.zero()) for k in range(top + 1)]
            return DensePoly(dense, self.domain)
        total = self.ctx.exact_zero
        point = self.lifted_t
        for k, c in coefficients.items():
            total = total + c * point**k
        return total

    # exact Lucas tables, k = 0..p

    @cached_property
    def u_shift(self) -> list[Any]:
        return lucas_terms("u", self.p, 2 - self.t)

    @cached_property
    def v_shift(self) -> list[Any]:
        return lucas_terms("v", self.p, 2 - self.t)

    @cached_property
    def u_diag(self) -> list[Any]:
        return lucas_terms("u", self.p, self.t, self.t)

    @cached_property
    def v_diag(self) -> list[Any]:
        return lucas_terms("v", self.p, self.t, self.t)

    def weighted(self, table: str, d: int) -> Any:
        """``sum_{k<p} w_k / k**d`` for one of the Lucas tables, in p-adic arithmetic."""
        lifted = self._lifted(table)
        return weighted_sum(lifted, d, self.ctx)

    def _lifted(self, table: str) -> list[Any]:
        if table not in self._lifted_tables:
            self._lifted_tables[table] = [self.lift(w) for w in getattr(self, table)]
        return self._lifted_tables[table]

    # left-hand sides

    def binomial_sum(self, d: int, harmonic: bool = False) -> Any:
        """``p sum_{k<p} t**k [H_{k-1}(2)] / (k**d C(2k,k))``"""
        ctx, p = self.ctx, self.p
        inv2 = ctx.inverse_powers(2)
        h = ctx.exact_zero
        coeffs = {}
        for k in range(1, p):
            c = ctx.of(Fraction(p, k**d * comb(2 * k, k)))
            coeffs[k] = c * h if harmonic else c
            h = h + ctx.unit(inv2[k])
        return self.series(coeffs)

    def reversed_binomial_sum(self, d: int, harmonic: bool = False) -> Any:
        """``sum_{k<p} t**(p-k) C(2k,k) [H_k(2)] / k**d``"""
        ctx, p = self.ctx, self.p
        inv2 = ctx.inverse_powers(2)
        h = ctx.exact_zero
        coeffs = {}
        for k in range(1, p):
            h = h + ctx.unit(inv2[k])
            c = ctx.of(Fraction(comb(2 * k, k), k**d))
            coeffs[p - k] = c * h if harmonic else c
        return self.series(coeffs)


Sides = Callable[[TVariable], tuple[Any, Any]]
MAIN_SIDES: dict[str, Sides] = {}


def _sides(id: str) -> Callable[[Sides], Sides]:
    def decorator(func: Sides) -> Sides:
        MAIN_SIDES[id] = func
        return func

    return decorator


@_sides("MAIN-CC1")
def _cc1(var: TVariable) -> tuple[Any, Any]:
    t, p = var.t, var.p
    closed = var.lift((t * var.u_shift[p] - t**p) * HALF)
    return var.binomial_sum(1), closed + var.lifted_t * var.weighted("u_shift", 2) * p**2


@_sides("MAIN-CC2")
def _cc2(var: TVariable) -> tuple[Any, Any]:
    t, p = var.t, var.p
    closed = var.lift((2 - var.v_shift[p] - t**p) * Fraction(1, 2 * p))
    return var.binomial_sum(2), closed - var.weighted("v_shift", 3) * p**2


@_sides("MAIN-CC3")
def _cc3(var: TVariable) -> tuple[Any, Any]:
    return var.binomial_sum(1, harmonic=True), var.lifted_t * var.weighted("u_shift", 2)


@_sides("MAIN-CC4")
def _cc4(var: TVariable) -> tuple[Any, Any]:
    return var.binomial_sum(2, harmonic=True), -var.weighted("v_shift", 3)


@_sides("MAIN-D3")
def _d3(var: TVariable) -> tuple[Any, Any]:
    t, p = var.t, var.p
    closed = var.lift(
        (1 - (var.v_shift[p] + t**p) * Fraction(1, comb(2 * p, p))) * Fraction(1, p * p)
    )
    return var.binomial_sum(3), closed - var.weighted("v_shift", 1) * Fraction(1, p)


@_sides("MAIN-CC5")
def _cc5(var: TVariable) -> tuple[Any, Any]:
    return var.reversed_binomial_sum(0, harmonic=True), var.lifted_t * var.weighted("u_shift", 2) * -2


@_sides("MAIN-CC6")
def _cc6(var: TVariable) -> tuple[Any, Any]:
    return var.reversed_binomial_sum(1, harmonic=True), var.weighted("v_shift", 3) * -2


@_sides("MAIN-CC7")
def _cc7(var: TVariable) -> tuple[Any, Any]:
    p, ctx = var.p, var.ctx
    coeffs = {p - 1 - k: ctx.of(comb(2 * k, k)) for k in range(p)}
    lhs = var.series(coeffs)
    closed = var.lift(2 * var.u_diag[p] - var.u_shift[p])
    tail = (var.weighted("u_shift", 2) + var.weighted("u_diag", 2)) * (2 * p**2)
    return lhs, closed - tail


@_sides("MAIN-CC8")
def _cc8(var: TVariable) -> tuple[Any, Any]:
    t, p = var.t, var.p
    closed = (3 * t**p + 2 - var.v_shift[p] - 4 * var.v_diag[p]) * Fraction(1, p)
    return var.reversed_binomial_sum(1), var.lift(closed)


@_sides("MAIN-CC9")
def _cc9(var: TVariable) -> tuple[Any, Any]:
    t, p = var.t, var.p
    closed = (var.v_shift[p] + 2 * var.v_diag[p] - t**p - 2) * Fraction(1, p * p)
    return var.reversed_binomial_sum(2) * HALF, var.lift(closed) + var.weighted("v_shift", 2)


def main_sides(id: str, ctx: PadicContext, t: int | Fraction | None = None) -> tuple[Any, Any]:
    """Both sides of a MAIN case, symbolic in ``t`` or at a rational point."""
    try:
        func = MAIN_SIDES[id]
    except KeyError:
        raise UnknownCase(f"Unknown case '{id}'. Allowed: {', '.join(MAIN_SIDES)}") from None
    return func(TVariable(ctx, t))


def _register(id: str, exponent: int, anchor: str) -> None:
    def evaluate(ctx: PadicContext) -> list[Comparison]:
        lhs, rhs = main_sides(id, ctx)
        return comparisons([("t", lhs, rhs)], exponent)

    congruence(id, kind="polynomial", exponent=exponent, anchor=anchor, guard=3,
               notes="compared coefficient-wise as polynomials in t")(evaluate)


for _id, _j in (("MAIN-CC1", 3), ("MAIN-CC2", 3), ("MAIN-CC3", 1), ("MAIN-CC4", 1)):
    _register(_id, _j, ANCHOR_CC)
_register("MAIN-D3", 2, "we have the polynomial congruence")
for _id in ("MAIN-CC5", "MAIN-CC6"):
    _register(_id, 1, "have equivalent formulations")


@congruence("MAIN-SWITCH", kind="numeric", exponent=1, anchor="is based on the congruence")
def _switch(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    return comparisons(
        [
            (f"k={k}", ctx.of(Fraction(2 * p, k * comb(2 * k, k))), comb(2 * (p - k), p - k))
            for k in range(1, p)
        ],
        1,
    )


for _id, _j in (("MAIN-CC7", 3), ("MAIN-CC8", 2), ("MAIN-CC9", 1)):
    _register(_id, _j, ANCHOR_LAST)
