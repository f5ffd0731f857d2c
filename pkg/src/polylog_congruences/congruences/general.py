"""General polynomial congruences in ``x`` between finite polylogarithms.

All sides are polynomials over ``Z/p**j``. ``S f`` denotes ``f(1 - x)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from polylog_congruences.arith import PadicContext
from polylog_congruences.congruences.registry import Comparison, comparisons, congruence
from polylog_congruences.mobius import build_3p_invariant
from polylog_congruences.polylog import finite_polylog, polylog_poly, qp_poly
from polylog_congruences.rings import DensePoly, PadicDomain, eisenstein, gaussian
from polylog_congruences.special import bernoulli_mod, mhs

ANCHOR_C1 = "the inversion relation"


def _shift(f: DensePoly) -> DensePoly:
    return f.compose_affine(-1, 1)


def _xp(ctx: PadicContext, f: DensePoly) -> DensePoly:
    return DensePoly.monomial(ctx.p, f.domain)


def _inversion(d: int):
    def evaluate(ctx: PadicContext) -> list[Comparison]:
        pounds = polylog_poly(d, ctx, 1)
        return comparisons([(f"d={d}", pounds, pounds.reciprocal(ctx.p) * (-1) ** d)], 1)

    return evaluate


for _d in range(1, 5):
    congruence(f"GEN-C1-{_d}", kind="polynomial", exponent=1, anchor=ANCHOR_C1, greater_than=2)(
        _inversion(_d)
    )


def _inversion_p2(d: int):
    def evaluate(ctx: PadicContext) -> list[Comparison]:
        p = ctx.p
        pounds = polylog_poly(d, ctx, 2)
        rhs = pounds.reciprocal(p) * (-1) ** d - polylog_poly(d + 1, ctx, 2) * (d * p)
        return comparisons([(f"d={d}", pounds, rhs)], 2)

    return evaluate


for _d in range(1, 4):
    congruence(
        f"GEN-C1B-{_d}",
        kind="polynomial",
        exponent=2,
        anchor="its extension modulo $p^2$",
        greater_than=2,
    )(_inversion_p2(_d))


@congruence(
    "GEN-C1C",
    kind="polynomial",
    exponent=3,
    anchor="extended as follows modulo arbitrary powers",
    greater_than=2,
    notes="expansion truncated after two correction terms, compared mod p^3",
)
def _inversion_p3(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    pairs = []
    for d in (1, 2):
        lhs = polylog_poly(d, ctx, 3).reciprocal(p) * (-1) ** d
        rhs = polylog_poly(d, ctx, 3)
        for m in (1, 2):
            rhs = rhs + polylog_poly(d + m, ctx, 3) * (comb(d + m - 1, m) * p**m)
        pairs.append((f"d={d}", lhs, rhs))
    return comparisons(pairs, 3)


def _distribution(d: int):
    def evaluate(ctx: PadicContext) -> list[Comparison]:
        pounds = polylog_poly(d, ctx, 1)
        xp = _xp(ctx, pounds)
        lhs = pounds.substitute_power(2)
        rhs = ((1 + xp) * pounds + (1 - xp) * pounds.compose_affine(-1, 0)) * 2 ** (d - 1)
        return comparisons([(f"d={d}", lhs, rhs)], 1)

    return evaluate


for _d in range(1, 4):
    congruence(
        f"GEN-C6-{_d}",
        kind="polynomial",
        exponent=1,
        anchor="the distribution relation",
        greater_than=2,
    )(_distribution(_d))


def _distribution_at_points(m: int):
    """``£_d(x**m)`` against ``m**(d-1) sum_k sum_j (z_k x)**(pj) £_d(z_k x)`` with ``z`` running over the m-th roots of unity."""

    def evaluate(ctx: PadicContext) -> list[Comparison]:
        p = ctx.p
        ring = gaussian(PadicDomain(ctx)) if m == 4 else eisenstein(PadicDomain(ctx))
        gen = ring.generator
        root = {3: gen**2, 4: gen, 6: gen}[m]
        pairs = []
        for d in (1, 2, 3):
            for x0 in (2, 3):
                lhs = ring.coerce(finite_polylog(d, x0**m, ctx))
                rhs = ring.zero()
                for k in range(m):
                    point = root**k * x0
                    step = point**p
                    weight, term = ring.one(), ring.one()
                    for _ in range(1, m):
                        term = term * step
                        weight = weight + term
                    rhs = rhs + weight * finite_polylog(d, point, ctx)
                pairs.append((f"d={d},x={x0}", lhs, rhs * m ** (d - 1)))
        return comparisons(pairs, 1)

    return evaluate


for _m in (3, 4, 6):
    congruence(
        f"GEN-C6-M{_m}",
        kind="quad-numeric",
        exponent=1,
        anchor="the distribution relation",
        greater_than=3,
        coprime_to=(_m,),
        notes=f"m={_m} evaluated at x in {{2, 3}} with the roots of unity of the "
        + ("Gaussian" if _m == 4 else "sixth-root") + " ring",
    )(_distribution_at_points(_m))


@congruence("GEN-C2", kind="polynomial", exponent=2, anchor="a congruence noted by Granville")
def _granville_p2(ctx: PadicContext) -> list[Comparison]:
    rhs = -_shift(polylog_poly(1, ctx, 2)) - polylog_poly(2, ctx, 2) * ctx.p
    return comparisons([("Q", qp_poly(ctx, 2), rhs)], 2)


@congruence("GEN-C3", kind="polynomial", exponent=1, anchor="the 3-term relation for $\\pounds_2$")
def _three_term(ctx: PadicContext) -> list[Comparison]:
    pounds = polylog_poly(2, ctx, 1)
    rhs = _shift(pounds) + pounds.at_one_minus_inverse(ctx.p)
    return comparisons([("d=2", pounds, rhs)], 1)


@congruence(
    "GEN-C4", kind="polynomial", exponent=1, anchor="another congruence rediscovered by Granville"
)
def _granville_square(ctx: PadicContext) -> list[Comparison]:
    q = qp_poly(ctx, 1)
    pounds = polylog_poly(2, ctx, 1)
    xp = _xp(ctx, pounds)
    rhs = -(xp * pounds) - (1 - xp) * _shift(pounds)
    return comparisons([("Q^2/2", q**2 * Fraction(1, 2), rhs)], 1)


def _pounds3_minus_one(ctx: PadicContext) -> int:
    return polylog_poly(3, ctx, 1)(-1)


@congruence("GEN-C5", kind="polynomial", exponent=1, anchor="rediscovered by Dilcher and Skula")
def _dilcher_skula(ctx: PadicContext) -> list[Comparison]:
    p = ctx.p
    q = qp_poly(ctx, 1)
    pounds = polylog_poly(3, ctx, 1)
    xp = _xp(ctx, pounds)
    rhs = (
        -(xp * pounds)
        - (1 - xp) * _shift(pounds)
        - xp * (1 - xp) * pounds.at_one_minus_inverse(p)
        - xp * (1 - xp) * (Fraction(2, 3) * _pounds3_minus_one(ctx))
    )
    return comparisons([("Q^3/6", q**3 * Fraction(1, 6), rhs)], 1)


@congruence(
    "GEN-EQQ", kind="polynomial", exponent=1, anchor="plainly follows from the definition",
    greater_than=2,
)
def _quotient_is_pounds1(ctx: PadicContext) -> list[Comparison]:
    return comparisons([("Q", qp_poly(ctx, 1), -polylog_poly(1, ctx, 1))], 1)


@congruence("GEN-L1", kind="polynomial", exponent=1, anchor="the second and third of the following",
            greater_than=2)
def _l1(ctx: PadicContext) -> list[Comparison]:
    pounds = polylog_poly(1, ctx, 1)
    return comparisons([("d=1", pounds, _shift(pounds))], 1)


@congruence("GEN-L2", kind="polynomial", exponent=1, anchor="the second and third of the following")
def _l2(ctx: PadicContext) -> list[Comparison]:
    one = polylog_poly(1, ctx, 1)
    two = polylog_poly(2, ctx, 1)
    xp = _xp(ctx, two)
    rhs = -(xp * two) - (1 - xp) * _shift(two)
    return comparisons([("d=2", one**2 * Fraction(1, 2), rhs)], 1)


@congruence("GEN-L3", kind="polynomial", exponent=1, anchor="the second and third of the following")
def _l3(ctx: PadicContext) -> list[Comparison]:
    one = polylog_poly(1, ctx, 1)
    three = polylog_poly(3, ctx, 1)
    xp = _xp(ctx, three)
    rhs = build_3p_invariant(three, ctx) + xp * (1 - xp) * (
        Fraction(2, 3) * _pounds3_minus_one(ctx)
    )
    return comparisons([("d=3", one**3 * Fraction(1, 6), rhs)], 1)


@congruence("GEN-GVAR", kind="polynomial", exponent=1,
            anchor="Hence this determines the upper half")
def _gvar(ctx: PadicContext) -> list[Comparison]:
    one = polylog_poly(1, ctx, 1)
    two = polylog_poly(2, ctx, 1)
    rhs = -_shift(two) - two.at_one_minus_inverse(2 * ctx.p)
    return comparisons([("d=2", one**2 * Fraction(1, 2), rhs)], 1)


def _powers(d: int):
    def evaluate(ctx: PadicContext) -> list[Comparison]:
        p = ctx.p
        one = polylog_poly(1, ctx, 1)
        pounds = polylog_poly(d, ctx, 1)
        xp = _xp(ctx, pounds)
        lhs = (one**d * Fraction(1, factorial(d))).truncate(p + 1)
        bern = Fraction(bernoulli_mod(p - d, p), d)
        rhs = (_shift(pounds) * (-1) ** (d - 1) + xp * (bern * (-1) ** d)).truncate(p + 1)
        return comparisons([(f"d={d}", lhs, rhs)], 1)

    return evaluate


for _d in range(2, 5):
    congruence(
        f"GEN-POWERS-{_d}",
        kind="polynomial",
        exponent=1,
        anchor="denotes a Bernoulli number",
        greater_than=_d + 1,
        notes="compared modulo (x^(p+1), p)",
    )(_powers(_d))


def _nested(d: int):
    def evaluate(ctx: PadicContext) -> list[Comparison]:
        p = ctx.p
        pounds = polylog_poly(d, ctx, 1)
        x = DensePoly.x(pounds.domain)
        lhs = mhs([1] * d, p - 1, ctx, x)
        return comparisons([(f"d={d}", lhs, _shift(pounds) * (-1) ** (d - 1))], 1)

    return evaluate


for _d in range(1, 4):
    congruence(
        f"GEN-MHS-{_d}",
        kind="polynomial",
        exponent=1,
        anchor="obtained by the authors in",
        greater_than=max(_d + 1, 2),
    )(_nested(_d))
