"""Finite polylogarithms ``£_d(x) = sum_{k=1}^{p-1} x**k / k**d`` and the Fermat-quotient polynomial."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Any

from polylog_congruences.arith import PadicContext, reduce
from polylog_congruences.errors import PreconditionViolated
from polylog_congruences.rings import DensePoly, ResidueRing


def finite_polylog(d: int, x: Any, ctx: PadicContext) -> Any:
    """Evaluate ``£_d`` at ``x`` by Horner's rule.

    ``x`` may be a rational, a p-adic number, a quadratic element over a
    p-adic base or a polynomial over p-adic coefficients.
    """
    if d < 1:
        raise PreconditionViolated(f"polylogarithm index must be >= 1, got {d}")
    if isinstance(x, (int, Fraction)):
        x = ctx.of(x)
    weights = ctx.inverse_powers(d)
    p = ctx.p
    acc = x * ctx.unit(weights[p - 1])
    for k in range(p - 2, 0, -1):
        acc = (acc + ctx.unit(weights[k])) * x
    return acc


def polylog_poly(d: int, ctx: PadicContext, j: int | None = None) -> DensePoly:
    """``£_d`` as a polynomial over ``Z/p**j`` (``j`` defaults to ``ctx.k``)."""
    if d < 1:
        raise PreconditionViolated(f"polylogarithm index must be >= 1, got {d}")
    j = ctx.k if j is None else j
    if j > ctx.precision:
        raise PreconditionViolated(f"j={j} exceeds the working precision {ctx.precision}")
    modulus = ctx.p**j
    weights = ctx.inverse_powers(d)
    return DensePoly([0] + [w % modulus for w in weights[1:]], ResidueRing(modulus), ctx.p - 1)


def qp_poly(ctx: PadicContext, j: int | None = None) -> DensePoly:
    """``Q_p(x) = (x**p + (1-x)**p - 1) / p`` over ``Z/p**j``."""
    p = ctx.p
    j = ctx.k if j is None else j
    if j > ctx.precision:
        raise PreconditionViolated(f"j={j} exceeds the working precision {ctx.precision}")
    coeffs = [0] + [(-1) ** k * comb(p, k) // p for k in range(1, p)]
    return DensePoly(coeffs, ResidueRing(p**j), p - 1)


def polylog_residue(d: int, x: Fraction | int, ctx: PadicContext, j: int | None = None) -> int:
    """``£_d(x) mod p**j`` for a p-integral rational ``x``."""
    return reduce(finite_polylog(d, x, ctx), ctx.k if j is None else j)
