"""Auxiliary congruences used along the way: binomial expansions near p, Wolstenholme-type vanishing,
square roots of ``a**(p-1)`` and Bernoulli cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from polylog_congruences.arith import PadicContext, fermat_quotient, legendre
from polylog_congruences.congruences.registry import Comparison, comparisons, congruence
from polylog_congruences.special import (
    bernoulli_from_harmonic,
    bernoulli_mod,
    bernoulli_poly_mod,
    euler_mod,
    harmonic,
    mhs,
)


def _harmonic_prefixes(ctx: PadicContext):
    """Yield ``(k, H_{k-1}(1), H_{k-1}(1,1), H_{k-1}(2))`` for ``0 < k < p``."""
    inv, inv2 = ctx.inverses, ctx.inverse_powers(2)
    h1 = h11 = h2 = ctx.exact_zero
    for k in range(1, ctx.p):
        yield k, h1, h11, h2
        step = ctx.unit(inv[k])
        h11 = h11 + h1 * step
        h1 = h1 + step
        h2 = h2 + ctx.unit(inv2[k])


@congruence("AUX-BIN2P", kind="numeric", exponent=4, anchor="Now we use the standard congruences")
def _binomial_2p(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    out = []
    for k, h1, _, _ in _harmonic_prefixes(ctx):
        rhs = ctx.of(Fraction(2 * (-1) ** (k - 1) * p, k)) * (1 - h1.shift(1) * 2)
        out.append(Comparison(f"C(2p,{k})", comb(2 * p, k), rhs, 3))
    bern = ctx.residue(bernoulli_mod(p - 3, p), 1)
    out.append(Comparison("C(2p,p)", comb(2 * p, p), 2 - (bern * Fraction(4, 3)).shift(3), 4))
    return out


@congruence("AUX-BINP1", kind="numeric", exponent=4, anchor="One easily checks that for")
def _binomial_near_p(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    out = []
    for k, h1, h11, h2 in _harmonic_prefixes(ctx):
        sign = (-1) ** (k - 1)
        out.append(Comparison(
            f"C(p-1,{k - 1})", comb(p - 1, k - 1), (1 - h1.shift(1) + h11.shift(2)) * sign, 3
        ))
        out.append(Comparison(
            f"C(p-1+{k},{k - 1})", comb(p - 1 + k, k - 1), 1 + h1.shift(1) + h11.shift(2), 3
        ))
        out.append(Comparison(
            f"C(p,{k})C(p-1+{k},{k - 1})",
            comb(p, k) * comb(p - 1 + k, k - 1),
            ctx.of(Fraction(sign * p, k)) * (1 - h2.shift(2)),
            4,
        ))
    return out


def _half_binomial(k: int) -> Fraction:
    """``C(1/2, k)``"""
    out = Fraction(1)
    for j in range(k):
        out = out * (Fraction(1, 2) - j) / (j + 1)
    return out


@congruence(
    "AUX-EULER", kind="numeric", exponent=3, anchor="is a familiar assertion",
    notes="a in {2, 3, 5} (skipping a = p), n = 1..3",
)
def _euler_criterion_lift(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    out = []
    for a in (2, 3, 5):
        if a % p == 0:
            continue
        pq = fermat_quotient(a, ctx).shift(1)
        lhs = legendre(a, p) * pow(a, (p - 1) // 2)
        for n in (1, 2, 3):
            rhs = ctx.exact_zero
            for k in range(n):
                rhs = rhs + pq**k * _half_binomial(k)
            out.append(Comparison(f"a={a},n={n}", lhs, rhs, n))
    return out


@congruence("AUX-WOLST", kind="numeric", exponent=2, anchor="H_{p-1}(2)\\equiv 0\\pmod{p}")
def _wolstenholme(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    return [
        Comparison("H(1)", harmonic(p - 1, 1, ctx), 0, 2),
        Comparison("H(2)", harmonic(p - 1, 2, ctx), 0, 1),
    ]


@congruence("AUX-HR", kind="numeric", exponent=2, anchor="for $1\\leq r\\leq p-3$ we have")
def _elementary_symmetric(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    pairs = []
    for r in range(1, min(4, p - 3) + 1):
        bern = ctx.residue(bernoulli_mod(p - r - 1, p), 1)
        rhs = (bern * Fraction((-1) ** (r - 1), r + 1)).shift(1)
        pairs.append((f"r={r}", mhs([1] * r, p - 1, ctx), rhs))
    return comparisons(pairs, 2)


@congruence("AUX-EB", kind="numeric", exponent=1, anchor="In particular, one finds that")
def _quarter_bernoulli(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    lhs = bernoulli_poly_mod(p - 2, Fraction(1, 4), p)
    return comparisons([("B(1/4)", lhs, 8 * euler_mod(p - 3, p))], 1)


@congruence(
    "AUX-GLAISHER", kind="numeric", exponent=1, anchor="found by Glaisher in 1900",
    notes="recurrence table against the harmonic route for every even index up to p-3",
)
def _bernoulli_routes(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    return comparisons(
        [(f"B_{m}", bernoulli_mod(m, p), bernoulli_from_harmonic(m, p)) for m in range(2, p - 2, 2)],
        1,
    )
