"""Special values of finite polylogarithms at rationals and in quadratic rings.

Quadratic cases evaluate one member of each conjugate pair and obtain the
other by ring conjugation. In the sixth-root ring ``i*sqrt(3)`` is
``2*w - 1`` for every prime.
"""

from __future__ import annotations

from fractions import Fraction

from polylog_congruences.arith import PadicContext, fermat_quotient, legendre
from polylog_congruences.congruences.registry import Comparison, comparisons, congruence
from polylog_congruences.polylog import finite_polylog
from polylog_congruences.rings import (
    PadicDomain,
    QuadElem,
    eisenstein,
    gaussian,
    golden,
    sqrt_discriminant,
)
from polylog_congruences.special import (
    bernoulli_mod,
    bernoulli_poly_mod,
    euler_mod,
    lucas_quotient,
    residue_class_formula,
    residue_class_sum,
)

ANCHOR_QUAD = "In particular, one finds that"


def _bern(ctx: PadicContext, m: int):
    return ctx.residue(bernoulli_mod(m, ctx.p), 1)


def _conjugate_pair(label: str, point: QuadElem, d: int, rhs: QuadElem, ctx: PadicContext):
    """The statement at ``point`` and its conjugate image."""
    return [
        (f"{label}", finite_polylog(d, point, ctx), rhs),
        (f"conj {label}", finite_polylog(d, point.conj(), ctx), rhs.conj()),
    ]


@congruence(
    "SV-L1-ODD", kind="numeric", exponent=3, anchor="found by Glaisher in 1900",
    notes="d=1 for p>3, d=3 only for p>5 (needs p > d+2)",
)
def _glaisher_odd(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    pairs = []
    for d in (1, 3):
        if p <= d + 2:
            continue
        rhs = _bern(ctx, p - d - 2).shift(2) * Fraction(-d * (d + 1), 2 * (d + 2))
        pairs.append((f"d={d}", finite_polylog(d, 1, ctx), rhs))
    return comparisons(pairs, 3)


@congruence(
    "SV-L1-EVEN", kind="numeric", exponent=2, anchor="found by Glaisher in 1900",
    notes="d=2 for p>3, d=4 only for p>5 (needs p > d+2)",
)
def _glaisher_even(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    pairs = []
    for d in (2, 4):
        if p <= d + 2:
            continue
        rhs = _bern(ctx, p - d - 1).shift(1) * Fraction(d, d + 1)
        pairs.append((f"d={d}", finite_polylog(d, 1, ctx), rhs))
    return comparisons(pairs, 2)


@congruence("SV-LM1-1", kind="numeric", exponent=3, anchor="we combine the above congruences")
def _minus_one_d1(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    q = fermat_quotient(2, ctx)
    rhs = -2 * q + q**2 * p - (q**3 * Fraction(2, 3) + _bern(ctx, p - 3) * Fraction(1, 4)).shift(2)
    return comparisons([("d=1", finite_polylog(1, -1, ctx), rhs)], 3)


def _minus_one(d: int):
    """Odd ``d``: ``-(2(1-2**(1-d))/d) B_{p-d}`` mod p; even ``d``: ``(d(1-2**-d)/(d+1)) p B_{p-d-1}`` mod p**2."""

    def evaluate(ctx: PadicContext) -> list[Comparison]:
        p = ctx.p
        if d % 2:
            rhs = _bern(ctx, p - d) * (-2 * (1 - Fraction(1, 2 ** (d - 1))) / d)
            j = 1
        else:
            rhs = _bern(ctx, p - d - 1).shift(1) * (d * (1 - Fraction(1, 2**d)) / (d + 1))
            j = 2
        return comparisons([(f"d={d}", finite_polylog(d, -1, ctx), rhs)], j)

    return evaluate


for _d, _j, _gt in ((2, 2, 3), (3, 1, 4), (4, 2, 5)):
    congruence(
        f"SV-LM1-{_d}",
        kind="numeric",
        exponent=_j,
        anchor="we combine the above congruences",
        greater_than=_gt,
    )(_minus_one(_d))


@congruence("SV-2SET", kind="numeric", exponent=3, anchor="all valid for $p>3$")
def _two_and_half(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    q = fermat_quotient(2, ctx)
    b = _bern(ctx, p - 3)
    half = Fraction(1, 2)
    out = [
        Comparison("£1(2)", finite_polylog(1, 2, ctx),
                   -2 * q - (b * Fraction(7, 12)).shift(2), 3),
        Comparison("£2(2)", finite_polylog(2, 2, ctx),
                   -(q**2) + (q**3 * Fraction(2, 3) + b * Fraction(7, 6)).shift(1), 2),
        Comparison("£3(2)", finite_polylog(3, 2, ctx),
                   -(q**3) * Fraction(1, 3) - b * Fraction(7, 24), 1),
        Comparison("£1(1/2)", finite_polylog(1, half, ctx),
                   q - (q**2 * half).shift(1)
                   + (q**3 * Fraction(1, 3) - b * Fraction(7, 48)).shift(2), 3),
        Comparison("£2(1/2)", finite_polylog(2, half, ctx),
                   -(q**2) * half + (q**3 * half + b * Fraction(7, 24)).shift(1), 2),
        Comparison("£3(1/2)", finite_polylog(3, half, ctx),
                   q**3 * Fraction(1, 6) + b * Fraction(7, 48), 1),
    ]
    return out


@congruence("SV-I2", kind="quad-numeric", exponent=1, anchor=ANCHOR_QUAD)
def _dilog_at_i(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    ring = gaussian(PadicDomain(ctx))
    i = ring.generator
    rhs = (i + legendre(-1, p)) * Fraction(euler_mod(p - 3, p), 2)
    return comparisons(_conjugate_pair("£2(i)", i, 2, rhs, ctx), 1)


@congruence("SV-I3", kind="quad-numeric", exponent=1, anchor=ANCHOR_QUAD)
def _trilog_at_i(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    ring = gaussian(PadicDomain(ctx))
    i = ring.generator
    rhs = (i * legendre(-1, p) - 1) * Fraction(bernoulli_mod(p - 3, p), 32)
    return comparisons(_conjugate_pair("£3(i)", i, 3, rhs, ctx), 1)


def _sixth_root_ring(ctx: PadicContext):
    ring = eisenstein(PadicDomain(ctx))
    return ring, ring.generator, sqrt_discriminant(ring), legendre(ctx.p, 3)


@congruence(
    "SV-W2", kind="quad-numeric", exponent=1, anchor="all four congruences being modulo $p$",
    notes="i*sqrt(3) = 2w - 1 with w^2 = w - 1 for both classes of p mod 3",
)
def _dilog_at_w(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    ring, w, i_sqrt3, chi = _sixth_root_ring(ctx)
    b = bernoulli_poly_mod(p - 2, Fraction(1, 3), p)
    plus = (i_sqrt3 * Fraction(1, 3) + chi) * Fraction(b, 8)
    minus = (chi - i_sqrt3) * Fraction(b, 12)
    return comparisons(
        _conjugate_pair("£2(w)", w, 2, plus, ctx) + _conjugate_pair("£2(-w)", -w, 2, minus, ctx),
        1,
    )


@congruence(
    "SV-W3", kind="quad-numeric", exponent=1, anchor="all four congruences being modulo $p$",
    notes="i*sqrt(3) = 2w - 1 with w^2 = w - 1 for both classes of p mod 3",
)
def _trilog_at_w(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    ring, w, i_sqrt3, chi = _sixth_root_ring(ctx)
    b = bernoulli_mod(p - 3, p)
    plus = (1 - i_sqrt3 * chi) * Fraction(b, 18)
    minus = (-1 - i_sqrt3 * Fraction(chi, 3)) * Fraction(2 * b, 9)
    return comparisons(
        _conjugate_pair("£3(w)", w, 3, plus, ctx) + _conjugate_pair("£3(-w)", -w, 3, minus, ctx),
        1,
    )


@congruence("SV-THMI", kind="quad-numeric", exponent=1, anchor="We first compute")
def _dilog_near_i(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    ring = gaussian(PadicDomain(ctx))
    i = ring.generator
    chi = legendre(-1, p)
    q = fermat_quotient(2, ctx)
    e = Fraction(euler_mod(p - 3, p))
    one_plus_i = i + 1
    at_sum = (i * chi + 1) * (-(q**2) * Fraction(1, 8)) + chi * e / 2
    at_half = (i + chi) * (e / 4) - q**2 * Fraction(1, 8)
    return comparisons(
        _conjugate_pair("£2(1+i)", one_plus_i, 2, at_sum, ctx)
        + _conjugate_pair("£2((1+i)/2)", one_plus_i * Fraction(1, 2), 2, at_half, ctx),
        1,
    )


@congruence(
    "SV-THMW", kind="quad-numeric", exponent=1, anchor="will follow from the inversion relation",
    notes="i*sqrt(3) = 2w - 1 with w^2 = w - 1 for both classes of p mod 3",
)
def _dilog_near_w(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    ring, w, i_sqrt3, chi = _sixth_root_ring(ctx)
    q = fermat_quotient(3, ctx)
    b = Fraction(bernoulli_poly_mod(p - 2, Fraction(1, 3), p))
    one_plus_w = w + 1
    at_sum = (i_sqrt3 * chi + 3) * (-(q**2) * Fraction(1, 16)) + (3 * chi - i_sqrt3) * (b / 36)
    at_third = (i_sqrt3 + chi) * (b / 36) - q**2 * Fraction(1, 8)
    return comparisons(
        _conjugate_pair("£2(1+w)", one_plus_w, 2, at_sum, ctx)
        + _conjugate_pair("£2((1+w)/3)", one_plus_w * Fraction(1, 3), 2, at_third, ctx),
        1,
    )


@congruence("SV-THMPHI", kind="quad-numeric", exponent=1, anchor="is the Lucas quotient",
            greater_than=5)
def _values_at_phi(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    ring = golden(PadicDomain(ctx))
    phi = ring.generator
    sqrt5 = sqrt_discriminant(ring)
    chi = legendre(p, 5)
    ql = lucas_quotient(ctx)
    ql2 = ql**2
    scaled = sqrt5 * Fraction(chi, 5) + 1
    pairs = (
        _conjugate_pair("£2(phi)", phi, 2, sqrt5 * (ql2 * Fraction(-chi, 10)), ctx)
        + _conjugate_pair("£2(phi^2)", phi**2, 2, scaled * (ql2 * Fraction(-1, 2)), ctx)
        + _conjugate_pair("£2(-phi)", -phi, 2, scaled * (ql2 * Fraction(-1, 4)), ctx)
        + _conjugate_pair(
            "£3(phi^2)",
            phi**2,
            3,
            (sqrt5 * chi + 1)
            * ((ql**3 * Fraction(1, 2) + ctx.residue(bernoulli_mod(p - 3, p), 1)) * Fraction(-2, 15)),
            ctx,
        )
    )
    return comparisons(pairs, 1)


@congruence("SV-RESCLASS", kind="numeric", exponent=1, anchor="is the fractional part",
            greater_than=4)
def _residue_classes(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    pairs = []
    for m in (2, 3, 4, 6):
        for d in (1, 2, 3):
            if p <= d + 3:
                continue
            for r in range(m):
                pairs.append((
                    f"m={m},r={r},d={d}",
                    residue_class_sum(r, m, d, p),
                    residue_class_formula(r, m, d, p),
                ))
    return comparisons(pairs, 1)
