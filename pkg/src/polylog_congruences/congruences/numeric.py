"""Numerical specialisations: Fibonacci/Lucas sums at ``t = -1`` and sums at ``t = 1, 2, 3, 4, -2``.

Left-hand sides are evaluated directly from their definitions. Fibonacci and
Lucas numbers entering the right-hand sides are exact integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from polylog_congruences.arith import PadicApprox, PadicContext, fermat_quotient, legendre
from polylog_congruences.congruences.main import TVariable
from polylog_congruences.congruences.registry import Comparison, comparisons, congruence
from polylog_congruences.special import (
    bernoulli_mod,
    bernoulli_poly_mod,
    euler_mod,
    lucas_numbers,
    lucas_quotient,
)

ANCHOR_FIB = "yield the following three congruences"
ANCHOR_FIB_H = "where $F_k$ and $L_k$ are respectively"
ANCHOR_SUN = "the conjectures stated by"
ANCHOR_T = "Our new contributions due to Equation"
ANCHOR_AMONG = "Among those we mention"


def _bern(ctx: PadicContext) -> PadicApprox:
    return ctx.residue(bernoulli_mod(ctx.p - 3, ctx.p), 1)


def _bern_third(ctx: PadicContext) -> PadicApprox:
    return ctx.residue(bernoulli_poly_mod(ctx.p - 2, Fraction(1, 3), ctx.p), 1)


def _central_sum(
    ctx: PadicContext, d: int, weight: Callable[[int], int | Fraction] = lambda k: 1, start: int = 1
) -> PadicApprox:
    """``sum_{start<=k<p} C(2k,k) w(k) / k**d``"""
    total = ctx.exact_zero
    c = 1
    for k in range(ctx.p):
        if k:
            c = c * 2 * (2 * k - 1) // k
        if k >= start:
            total = total + Fraction(c * weight(k), k**d if k else 1)
    return total


def _binomial_sum(ctx: PadicContext, t: int, d: int, harmonic: bool = False) -> PadicApprox:
    return TVariable(ctx, t).binomial_sum(d, harmonic)


# -- Fibonacci and Lucas -----------------------------------------------------------


def _lucas_data(ctx: PadicContext) -> tuple[int, PadicApprox]:
    return legendre(ctx.p, 5), lucas_quotient(ctx)


@congruence("NUM-FIB-H1", kind="numeric", exponent=1, anchor=ANCHOR_FIB_H, greater_than=5)
def _fib_h1(ctx: PadicContext) -> list[Comparison]:
    chi, ql = _lucas_data(ctx)
    return comparisons([("t=-1", _binomial_sum(ctx, -1, 1, True), ql**2 * Fraction(chi, 5))], 1)


@congruence("NUM-FIB-H2", kind="numeric", exponent=1, anchor=ANCHOR_FIB_H, greater_than=5)
def _fib_h2(ctx: PadicContext) -> list[Comparison]:
    _, ql = _lucas_data(ctx)
    rhs = (ql**3 * Fraction(1, 2) + _bern(ctx)) * Fraction(4, 15)
    return comparisons([("t=-1", _binomial_sum(ctx, -1, 2, True), rhs)], 1)


@congruence("NUM-FIB-H0", kind="numeric", exponent=1, anchor=ANCHOR_FIB_H, greater_than=5)
def _fib_h0(ctx: PadicContext) -> list[Comparison]:
    chi, ql = _lucas_data(ctx)
    rhs = ql * Fraction(1, 5) + ql**2 * Fraction(2 * chi, 25)
    return comparisons([("t=-1", _binomial_sum(ctx, -1, 0, True), rhs)], 1)


@congruence("NUM-FIB-P1", kind="numeric", exponent=3, anchor=ANCHOR_FIB, greater_than=5)
def _fib_p1(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    chi, ql = _lucas_data(ctx)
    f, lucas = lucas_numbers(p)
    rhs = Fraction(1 - lucas * f, 2) + (ql**2 * Fraction(chi, 5)).shift(2)
    return comparisons([("t=-1", _binomial_sum(ctx, -1, 1), rhs)], 3)


@congruence("NUM-FIB-P2", kind="numeric", exponent=3, anchor=ANCHOR_FIB, greater_than=5)
def _fib_p2(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    _, ql = _lucas_data(ctx)
    _, lucas = lucas_numbers(p)
    tail = ((ql**3 * Fraction(1, 2) + _bern(ctx)) * Fraction(4, 15)).shift(2)
    rhs = Fraction(1 - lucas**2, 2 * p) + tail
    return comparisons([("t=-1", _binomial_sum(ctx, -1, 2), rhs)], 3)


@congruence("NUM-FIB-P0", kind="numeric", exponent=3, anchor=ANCHOR_FIB, greater_than=5)
def _fib_p0(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    chi, ql = _lucas_data(ctx)
    f, lucas = lucas_numbers(p)
    rhs = Fraction(p - lucas * f, 5) + (ql**2 * Fraction(2 * chi, 25)).shift(2)
    return comparisons([("t=-1", _binomial_sum(ctx, -1, 0), rhs)], 3)


# -- t = 2 and t = 4 ------------------------------------------------------------------


@congruence("NUM-SUN-1", kind="numeric", exponent=3, anchor=ANCHOR_SUN)
def _sun_1(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    q = fermat_quotient(2, ctx)
    e = ctx.residue(euler_mod(p - 3, p), 1)
    rhs = legendre(-1, p) - 1 - q.shift(1) + e.shift(2)
    return comparisons([("t=2", _binomial_sum(ctx, 2, 1), rhs)], 3)


@congruence("NUM-SUN-2", kind="numeric", exponent=3, anchor=ANCHOR_SUN)
def _sun_2(ctx: PadicContext) -> list[Comparison]:
    q = fermat_quotient(2, ctx)
    rhs = -q + (_bern(ctx) * Fraction(1, 16)).shift(2)
    return comparisons([("t=2", _binomial_sum(ctx, 2, 2), rhs)], 3)


@congruence("NUM-SUN-3", kind="numeric", exponent=3, anchor=ANCHOR_SUN)
def _sun_3(ctx: PadicContext) -> list[Comparison]:
    q = fermat_quotient(2, ctx)
    rhs = -4 * q - (2 * q**2).shift(1) + _bern(ctx).shift(2)
    return comparisons([("t=4", _binomial_sum(ctx, 4, 2), rhs)], 3)


@congruence("NUM-D3T4", kind="numeric", exponent=2, anchor="are not as easy to deal with", guard=3)
def _d3_t4(ctx: PadicContext) -> list[Comparison]:
    q = fermat_quotient(2, ctx)
    rhs = -4 * q**2 + (q**3 * Fraction(4, 3) - _bern(ctx) * Fraction(1, 6)).shift(1)
    return comparisons([("t=4", _binomial_sum(ctx, 4, 3), rhs)], 2)


@congruence(
    "NUM-D4T4", kind="numeric", exponent=1, anchor="one can derive the congruence",
    notes="checked directly from its statement; no d=4 polynomial congruence is implemented",
)
def _d4_t4(ctx: PadicContext) -> list[Comparison]:
    q = fermat_quotient(2, ctx)
    rhs = (2 * q**3 + _bern(ctx)) * Fraction(-4, 3)
    return comparisons([("t=4", _binomial_sum(ctx, 4, 4), rhs)], 1)


# -- sums of C(2k,k) against powers -------------------------------------------------------


@congruence("NUM-CC7-T1", kind="numeric", exponent=3, anchor=ANCHOR_T)
def _cc7_t1(ctx: PadicContext) -> list[Comparison]:
    rhs = legendre(ctx.p, 3) - (_bern_third(ctx) * Fraction(1, 3)).shift(2)
    return comparisons([("t=1", _central_sum(ctx, 0, start=0), rhs)], 3)


@congruence("NUM-CC7-T3", kind="numeric", exponent=3, anchor=ANCHOR_T)
def _cc7_t3(ctx: PadicContext) -> list[Comparison]:
    rhs = legendre(ctx.p, 3) - (_bern_third(ctx) * Fraction(2, 9)).shift(2)
    lhs = _central_sum(ctx, 0, lambda k: Fraction(1, 3**k), start=0)
    return comparisons([("t=3", lhs, rhs)], 3)


@congruence("NUM-CC7-TM2", kind="numeric", exponent=3, anchor=ANCHOR_T)
def _cc7_tm2(ctx: PadicContext) -> list[Comparison]:
    q = fermat_quotient(2, ctx)
    rhs = (q * Fraction(-4, 3)).shift(1)
    return comparisons([("t=-2", _central_sum(ctx, 0, lambda k: (-2) ** k), rhs)], 3)


@congruence(
    "NUM-CC8-LM1", kind="numeric", exponent=2, anchor=ANCHOR_AMONG,
    notes="right-hand side -2 q_L + p q_L^2",
)
def _cc8_lm1(ctx: PadicContext) -> list[Comparison]:
    ql = lucas_quotient(ctx)
    rhs = -2 * ql + (ql**2).shift(1)
    return comparisons([("t=-1", _central_sum(ctx, 1, lambda k: (-1) ** k), rhs)], 2)


@congruence("NUM-CC9-B", kind="numeric", exponent=1, anchor=ANCHOR_AMONG)
def _cc9_b(ctx: PadicContext) -> list[Comparison]:
    rhs = _bern_third(ctx) * Fraction(legendre(ctx.p, 3), 2)
    return comparisons([("t=1", _central_sum(ctx, 2), rhs)], 1)


# -- Fibonacci-weighted central binomial sums -------------------------------------------


def _fibonacci_table(n: int) -> tuple[list[int], list[int]]:
    fib, luc = [0, 1], [2, 1]
    for _ in range(2, n + 1):
        fib.append(fib[-1] + fib[-2])
        luc.append(luc[-1] + luc[-2])
    return fib, luc


@congruence("NUM-PHI-F", kind="numeric", exponent=2, anchor="give rise to nice congruences",
            greater_than=5)
def _phi_f(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    chi = legendre(p, 5)
    fib, _ = _fibonacci_table(3 * p + 1)
    ql = lucas_quotient(ctx)
    lhs = _central_sum(ctx, 1, lambda k: (-1) ** k * fib[3 * k - chi])
    return comparisons([("F", lhs, (ql**2 * Fraction(1, 5)).shift(1))], 2)


@congruence("NUM-PHI-L", kind="numeric", exponent=1, anchor="give rise to nice congruences",
            greater_than=5)
def _phi_l(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    chi = legendre(p, 5)
    _, luc = _fibonacci_table(3 * p + 1)
    lhs = _central_sum(ctx, 2, lambda k: (-1) ** k * luc[3 * k - chi])
    return comparisons([("L", lhs, 0)], 1)


def central_binomial_sum(ctx: PadicContext, d: int, t: int | Fraction = 1) -> PadicApprox:
    """``sum_{k=1}^{p-1} C(2k,k) t**k / k**d``, exposed for the compute command."""
    t = Fraction(t)
    return _central_sum(ctx, d, lambda k: t**k)

