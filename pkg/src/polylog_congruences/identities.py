"""Exact polynomial identities in ``t`` over the rationals.

Each identity is registered with a builder that returns the pairs of
polynomials that must agree for given ``n`` (and ``s`` where the identity
carries a harmonic weight). Lucas polynomials are always taken at ``t - 2``
unless the identity says otherwise.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from polylog_congruences.errors import PreconditionViolated, UnknownCase
from polylog_congruences.lucaspoly import lucas_terms
from polylog_congruences.mobius import GROUP, MobiusElement, act, invariant_from
from polylog_congruences.rings import DensePoly, RationalField, log_power_series, series_pow_log

logger = logging.getLogger(__name__)

QQ = RationalField()
Pairs = list[tuple[DensePoly, DensePoly]]


@dataclass(frozen=True)
class IdentityCase:
    id: str
    anchor: str
    build: Callable[[int, int], Pairs]
    uses_s: bool = False
    min_n: int = 1
    notes: str = ""


@dataclass
class IdentityVerdict:
    id: str
    n: int
    s: int | None
    passed: bool
    residual: DensePoly | None = None
    checked: int = field(default=0)


IDENTITIES: dict[str, IdentityCase] = {}


def identity(id: str, anchor: str, *, uses_s: bool = False, min_n: int = 1, notes: str = ""):
    """Register an identity builder under a stable id"""

    def decorator(func: Callable[[int, int], Pairs]) -> Callable[[int, int], Pairs]:
        IDENTITIES[id] = IdentityCase(id, anchor, func, uses_s, min_n, notes)
        return func

    return decorator


def _t() -> DensePoly:
    return DensePoly.x(QQ)


def _c(k: int) -> int:
    return comb(2 * k, k)


def _harmonic(n: int, s: int) -> Fraction:
    return sum((Fraction(1, k**s) for k in range(1, n + 1)), Fraction(0))


def _const(value: Fraction | int) -> DensePoly:
    return DensePoly.constant(value, QQ)


def _sum(polys) -> DensePoly:
    total = _const(0)
    for poly in polys:
        total = total + poly
    return total


def _lucas(kind: str, n: int) -> list[DensePoly]:
    return lucas_terms(kind, n, _t() - 2)


def _denominator_sum(n: int, d: int, weights: list[Fraction] | None = None, shift: int = 0) -> DensePoly:
    """``sum_{k<=n} w_k t**(k-shift) / (k**d C(2k,k))``"""
    t = _t()
    return _sum(
        t ** (k - shift) * (Fraction(1, k**d * _c(k)) * (weights[k] if weights else 1))
        for k in range(1, n + 1)
    )


@identity(
    "ID-I1",
    "in the course of the proof",
    notes="binomial sum with (-t)^(k-1) equals a u-polynomial",
)
def _i1(n: int, s: int) -> Pairs:
    u = _lucas("u", n)
    t = _t()
    lhs = _sum(
        (-t) ** (k - 1) * Fraction(comb(n, k) * comb(n + k - 1, k - 1), _c(k))
        for k in range(1, n + 1)
    )
    return [(lhs, u[n] * Fraction((-1) ** (n - 1), 2))]


@identity(
    "ID-I2",
    "in the course of the proof",
    notes="binomial sum with (-t)^k equals a v-polynomial",
)
def _i2(n: int, s: int) -> Pairs:
    v = _lucas("v", n)
    t = _t()
    lhs = _sum(
        (-t) ** k * Fraction(comb(n, k) * comb(n + k - 1, k), _c(k)) for k in range(0, n + 1)
    )
    return [(lhs, v[n] * Fraction((-1) ** n, 2))]


def _i3_sides(n: int) -> tuple[DensePoly, DensePoly]:
    u = _lucas("u", n)
    lhs = _denominator_sum(n, 1, shift=1) * _c(n)
    rhs = _sum(u[k] * Fraction(comb(2 * n, n - k), k) for k in range(1, n + 1))
    return lhs, rhs


def _i4_sides(n: int) -> tuple[DensePoly, DensePoly]:
    v = _lucas("v", n)
    lhs = _denominator_sum(n, 2) * _c(n)
    rhs = _sum(v[k] * Fraction(comb(2 * n, n - k), k * k) for k in range(1, n + 1))
    return lhs, rhs + _harmonic(n, 2) * _c(n)


@identity(
    "ID-I3",
    "For $n\\geq 1$ we have the polynomial identities",
    notes="C(2n,n) sum t^(k-1)/(k C(2k,k)) in u-polynomials",
)
def _i3(n: int, s: int) -> Pairs:
    return [_i3_sides(n)]


@identity(
    "ID-I4",
    "For $n\\geq 1$ we have the polynomial identities",
    notes="C(2n,n) sum t^k/(k^2 C(2k,k)) in v-polynomials",
)
def _i4(n: int, s: int) -> Pairs:
    return [_i4_sides(n)]


@identity(
    "ID-I4B",
    "For $n\\geq 1$ we have the polynomial identities",
    notes="C(2n,n) sum t^k/(k^3 C(2k,k)) in v-polynomials",
)
def _i4b(n: int, s: int) -> Pairs:
    v = _lucas("v", n)
    lhs = _denominator_sum(n, 3) * _c(n)
    single = _sum(v[k] * Fraction(comb(2 * n, n - k), k**3) for k in range(1, n + 1))
    double = _sum(
        v[j] * Fraction(2 * comb(2 * n, n - k) * (-1) ** (k - j), j * k * k)
        for k in range(1, n + 1)
        for j in range(1, k)
    )
    return [(lhs, single + double + _harmonic(n, 3) * _c(n))]


@identity(
    "ID-I5",
    "For any $n,s\\geq 1$ we have the polynomial identities",
    notes="telescoping relation between the d=0 and d=1 sums",
)
def _i5(n: int, s: int) -> Pairs:
    t = _t()
    lhs = (t - 4) * _denominator_sum(n, 0, shift=1) + 2 * _denominator_sum(n, 1, shift=1)
    return [(lhs, t**n * Fraction(1, _c(n)) - 1)]


@identity(
    "ID-I6",
    "For any $n,s\\geq 1$ we have the polynomial identities",
    notes="telescoping relation with harmonic weights H_(k-1)(s)",
    uses_s=True,
)
def _i6(n: int, s: int) -> Pairs:
    t = _t()
    weights = [_harmonic(k - 1, s) if k else Fraction(0) for k in range(n + 1)]
    lhs = (t - 4) * _denominator_sum(n, 0, weights, shift=1) + 2 * _denominator_sum(
        n, 1, weights, shift=1
    )
    rhs = t**n * (_harmonic(n, s) / _c(n)) - _denominator_sum(n, s)
    return [(lhs, rhs)]


@identity(
    "ID-S1",
    "For any $n>0$ we have",
    notes="antiderivative of u_n(t-2)",
)
def _s1(n: int, s: int) -> Pairs:
    u, v = _lucas("u", n), _lucas("v", n)
    return [(u[n].integrate(), (v[n] - 2 * (-1) ** n) * Fraction(1, n))]


@identity(
    "ID-S2",
    "For any $n>0$ we have",
    notes="antiderivative of (v_n(t-2) - 2(-1)^n)/t",
)
def _s2(n: int, s: int) -> Pairs:
    v = _lucas("v", n)

    def shifted(k: int) -> DensePoly:
        return v[k] - 2 * (-1) ** k

    lhs = shifted(n).divide_by_x().integrate()
    rhs = shifted(n) * Fraction(1, n) + _sum(
        shifted(k) * Fraction(2 * (-1) ** (n - k), k) for k in range(1, n)
    )
    return [(lhs, rhs)]


@identity(
    "ID-I7",
    "which was proved in",
    notes="partial sums of C(2k,k) t^(n-1-k) in u-polynomials",
)
def _i7(n: int, s: int) -> Pairs:
    t = _t()
    u = _lucas("u", n)
    lhs = _sum(t ** (n - 1 - k) * _c(k) for k in range(n))
    rhs = _sum(u[k] * comb(2 * n, n - k) for k in range(1, n + 1))
    return [(lhs, rhs)]


@identity(
    "ID-EQS1",
    "successive integration according to Lemma",
    notes="sum C(2k,k) t^(n-k)/(n-k) in v-polynomials",
)
def _eqs1(n: int, s: int) -> Pairs:
    t = _t()
    v = _lucas("v", n)
    lhs = _sum(t ** (n - k) * Fraction(_c(k), n - k) for k in range(n))
    rhs = _sum(
        (v[k] - 2 * (-1) ** k) * Fraction(comb(2 * n, n - k), k) for k in range(1, n + 1)
    )
    return [(lhs, rhs)]


@identity(
    "ID-EQS2",
    "successive integration according to Lemma",
    notes="sum C(2k,k) t^(n-k)/(n-k)^2 in v-polynomials",
)
def _eqs2(n: int, s: int) -> Pairs:
    t = _t()
    v = _lucas("v", n)

    def shifted(k: int) -> DensePoly:
        return v[k] - 2 * (-1) ** k

    lhs = _sum(t ** (n - k) * Fraction(_c(k), (n - k) ** 2) for k in range(n))
    single = _sum(shifted(k) * Fraction(comb(2 * n, n - k), k * k) for k in range(1, n + 1))
    double = _sum(
        shifted(j) * Fraction(2 * comb(2 * n, n - k) * (-1) ** (k - j), j * k)
        for k in range(1, n + 1)
        for j in range(1, k)
    )
    return [(lhs, single + double)]


@identity(
    "ID-I8",
    "which was also proved in",
    notes="sum C(2k,k) t^(n-k)/k through convolutions with v-polynomials",
)
def _i8(n: int, s: int) -> Pairs:
    t = _t()
    v = _lucas("v", n)
    lhs = _sum(t ** (n - k) * Fraction(_c(k), k) for k in range(1, n))
    inner = _sum(
        v[n - d - k] * Fraction(-2 * (-1) ** d * comb(2 * n, k), d)
        for d in range(1, n)
        for k in range(n - d)
    )
    constant = sum(
        (Fraction(-4 * (-1) ** d * comb(2 * n - 1, n - d - 1), d) for d in range(1, n)),
        Fraction(0),
    )
    return [(lhs, inner + constant)]


def _apery_like(n: int, d: int, weights: list[Fraction] | None = None) -> DensePoly:
    """``C(2n,n) sum_{k<=n} w_k t**(k-1) / (k**d C(2k,k))``"""
    if n == 0:
        return _const(0)
    return _denominator_sum(n, d, weights, shift=1) * _c(n)


@identity(
    "ID-RE",
    "is related to the original sequence",
    notes="first-order recurrence of C(2n,n)-normalised sums",
    uses_s=True,
)
def _re(n: int, s: int) -> Pairs:
    t = _t()
    pairs: Pairs = []
    weights = [_harmonic(k - 1, s) if k else Fraction(0) for k in range(n + 2)]
    for d in (0, 1, 2):
        step = Fraction(1, (n + 1) ** (d - 1)) if d else Fraction(n + 1)
        for w, tail in ((None, 1), (weights, _harmonic(n, s))):
            a_next, a_now = _apery_like(n + 1, d, w), _apery_like(n, d, w)
            delta = a_next * (n + 1) - a_now * (2 * (2 * n + 1))
            pairs.append((delta, t**n * (step * tail)))
    return pairs


@identity(
    "ID-LOGPOW",
    "equals the coefficient of $y^d$",
    notes="log(1+x)^d/d! against [y^d] binom(y,k); s plays the role of d",
    uses_s=True,
)
def _logpow(n: int, s: int) -> Pairs:
    return [(log_power_series(s, n), series_pow_log(s, n))]


@identity(
    "ID-GINV",
    "can be expressed as",
    notes="f + S f + RS f is invariant for R-invariant f; n is the formal degree",
)
def _ginv(n: int, s: int) -> Pairs:
    rng = random.Random(n)
    seed = DensePoly([Fraction(rng.randint(-9, 9)) for _ in range(n + 1)], QQ, n)
    f = seed + act(MobiusElement.R, seed, n)
    g = invariant_from(f, n)
    return [(act(element, g, n), g) for element in GROUP]


@identity(
    "ID-DTV",
    "The same readers may be aware",
    notes="d/dx v_n(x) = n u_n(x)",
)
def _dtv(n: int, s: int) -> Pairs:
    x = DensePoly.x(QQ)
    u, v = lucas_terms("u", n, x), lucas_terms("v", n, x)
    return [(v[n].derivative(), u[n] * n)]


@identity(
    "ID-I4-INT",
    "integrate Equation~\\eqref{I3} with respect to $t$",
    notes="integrating the t^(k-1)/k identity gives the t^k/k^2 identity",
)
def _i4_int(n: int, s: int) -> Pairs:
    lhs3, rhs3 = _i3_sides(n)
    lhs4, rhs4 = _i4_sides(n)
    return [(lhs3.integrate(), lhs4), (rhs3.integrate(), rhs4)]


@identity(
    "ID-GF",
    "They have generating functions",
    notes="generating-function recurrences of u_n and v_n",
)
def _gf(n: int, s: int) -> Pairs:
    x = DensePoly.x(QQ)
    u, v = lucas_terms("u", n, x), lucas_terms("v", n, x)
    zero = _const(0)

    def at(seq: list[DensePoly], k: int) -> DensePoly:
        return seq[k] if k >= 0 else zero

    pairs: Pairs = []
    for k in range(n + 1):
        pairs.append((at(u, k) - x * at(u, k - 1) + at(u, k - 2), _const(1 if k == 1 else 0)))
        expected = {0: _const(2), 1: -x}.get(k, zero)
        pairs.append((at(v, k) - x * at(v, k - 1) + at(v, k - 2), expected))
    return pairs


@identity(
    "ID-PARITY",
    "are even polynomials if $n$ is even",
    notes="u_(n+1)(-x) and v_n(-x) against their values at x",
)
def _parity(n: int, s: int) -> Pairs:
    x = DensePoly.x(QQ)
    u, v = lucas_terms("u", n + 1, x), lucas_terms("v", n, x)
    sign = (-1) ** n
    return [
        (u[n + 1].compose_affine(-1, 0), u[n + 1] * sign),
        (v[n].compose_affine(-1, 0), v[n] * sign),
    ]


@identity(
    "ID-CB4",
    "with $t=4$",
    notes="sum C(2k,k)/4^k = (2n+1) C(2n,n)/4^n",
    min_n=0,
)
def _cb4(n: int, s: int) -> Pairs:
    lhs = sum((Fraction(_c(k), 4**k) for k in range(n + 1)), Fraction(0))
    return [(_const(lhs), _const(Fraction((2 * n + 1) * _c(n), 4**n)))]


def list_identities() -> list[IdentityCase]:
    return list(IDENTITIES.values())


def get_identity(id: str) -> IdentityCase:
    try:
        return IDENTITIES[id]
    except KeyError:
        raise UnknownCase(
            f"Unknown identity '{id}'. Allowed: {', '.join(IDENTITIES)}"
        ) from None


def verify_identity(id: str, n: int, s: int | None = None) -> IdentityVerdict:
    """Check one identity at one ``n``; the residual is the first nonzero difference."""
    case = get_identity(id)
    if n < case.min_n:
        raise PreconditionViolated(f"{id} needs n >= {case.min_n}, got {n}")
    if case.uses_s:
        if s is None or s < 1:
            raise PreconditionViolated(f"{id} needs a weight s >= 1")
    pairs = case.build(n, s if s is not None else 1)
    for lhs, rhs in pairs:
        residual = lhs - rhs
        if not residual.is_zero:
            logger.info(
                "Identity failed",
                extra={"identity": id, "n": n, "s": s, "residual": repr(residual)},
            )
            return IdentityVerdict(id, n, s, False, residual, len(pairs))
    return IdentityVerdict(id, n, s, True, None, len(pairs))
