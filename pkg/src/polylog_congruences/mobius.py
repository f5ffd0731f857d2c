"""The anharmonic group generated by ``R: x -> 1/x`` and ``S: x -> 1 - x``.

The six elements permute ``{0, 1, oo}`` faithfully, so composition is read
off from that permutation. On polynomials of formal degree ``m`` the
generators act by

    (R f)(x) = (-x)**m f(1/x)        (S f)(x) = f(1 - x)

and a word such as ``RS`` applies its letters right to left.
"""

from __future__ import annotations

import logging
from collections import Counter
from enum import Enum
from fractions import Fraction
from math import gcd

import sympy
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from polylog_congruences.arith import PadicContext, inv_mod
from polylog_congruences.errors import FormalDegreeError, PreconditionViolated
from polylog_congruences.rings import DensePoly, PadicDomain, RationalField, ResidueRing

logger = logging.getLogger(__name__)


class _Infinity:
    _instance: _Infinity | None = None

    def __new__(cls) -> _Infinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "oo"


INFINITY = _Infinity()

Point = int | _Infinity


class MobiusElement(str, Enum):
    IDENTITY = "1"
    R = "R"
    S = "S"
    RS = "RS"
    SR = "SR"
    RSR = "RSR"

    @property
    def word(self) -> str:
        return "" if self is MobiusElement.IDENTITY else self.value


GROUP: tuple[MobiusElement, ...] = tuple(MobiusElement)


def _apply_letter(letter: str, z: Point, p: int) -> Point:
    if letter == "R":
        if z is INFINITY:
            return 0
        return INFINITY if z == 0 else inv_mod(z, p)
    if z is INFINITY:
        return INFINITY
    return (1 - z) % p


def apply_point(element: MobiusElement, z: Point, p: int) -> Point:
    if z is not INFINITY:
        z %= p
    for letter in reversed(element.word):
        z = _apply_letter(letter, z, p)
    return z


def _signature(element: MobiusElement) -> tuple[Point, ...]:
    # 0, 1 and oo are fixed set-wise by the group for every p; 5 is arbitrary.
    return tuple(apply_point(element, z, 5) for z in (0, 1, INFINITY))


_BY_SIGNATURE = {_signature(g): g for g in GROUP}


def compose(first: MobiusElement, second: MobiusElement) -> MobiusElement:
    """The element ``first o second`` (apply ``second`` first)."""
    images = tuple(
        apply_point(first, apply_point(second, z, 5), 5) for z in (0, 1, INFINITY)
    )
    return _BY_SIGNATURE[images]


def orbit(z: Point, p: int) -> frozenset[Point]:
    if p < 5 or not sympy.isprime(p):
        raise PreconditionViolated(f"orbits are defined for primes p >= 5, got {p}")
    return frozenset(apply_point(g, z, p) for g in GROUP)


def orbit_sizes(p: int) -> Counter[int]:
    """Histogram of orbit sizes on ``F_p`` together with infinity."""
    seen: set[Point] = set()
    sizes: Counter[int] = Counter()
    for z in [*range(p), INFINITY]:
        if z in seen:
            continue
        o = orbit(z, p)
        seen |= o
        sizes[len(o)] += 1
    return sizes


# -- action on polynomials ------------------------------------------------------


def _act_letter(letter: str, f: DensePoly, m: int) -> DensePoly:
    if letter == "R":
        g = f.reciprocal(m)
        return g if m % 2 == 0 else -g
    return f.compose_affine(-1, 1)


def act(element: MobiusElement, f: DensePoly, m: int | None = None) -> DensePoly:
    m = f.formal_degree if m is None else m
    if m < f.degree:
        raise FormalDegreeError(f"formal degree {m} is below the degree {f.degree}")
    g = f.with_formal_degree(m)
    for letter in reversed(element.word):
        g = _act_letter(letter, g, m)
    return g


def _require_six_invertible(f: DensePoly) -> None:
    domain = f.domain
    if isinstance(domain, ResidueRing):
        ok = gcd(domain.modulus, 6) == 1
    elif isinstance(domain, PadicDomain):
        ok = domain.ctx.p > 3
    else:
        ok = isinstance(domain, RationalField)
    if not ok:
        raise PreconditionViolated(f"projection needs 6 invertible in {domain}")


def project_invariant(f: DensePoly, m: int | None = None) -> DensePoly:
    """``(1/6) sum_g g.f``, an invariant of formal degree ``m``."""
    _require_six_invertible(f)
    m = f.formal_degree if m is None else m
    total = act(MobiusElement.IDENTITY, f, m)
    for g in GROUP[1:]:
        total = total + act(g, f, m)
    return total * Fraction(1, 6)


def is_invariant(f: DensePoly, m: int | None = None) -> bool:
    m = f.formal_degree if m is None else m
    return all(act(g, f, m) == f for g in (MobiusElement.R, MobiusElement.S))


def invariant_from(f: DensePoly, m: int | None = None) -> DensePoly:
    """``f + S f + RS f`` for an ``R``-invariant ``f``."""
    m = f.formal_degree if m is None else m
    if act(MobiusElement.R, f, m) != f:
        raise PreconditionViolated("f is not invariant under R")
    return (f + act(MobiusElement.S, f, m) + act(MobiusElement.RS, f, m)).with_formal_degree(m)


def build_3p_invariant(f: DensePoly, ctx: PadicContext) -> DensePoly:
    """``x**p f + (1 - x**p) f(1-x) + x**(2p) (1 - x**p) f(1 - 1/x)`` modulo p.

    Needs ``deg f < p`` and ``f(x) = -x**p f(1/x)``; the result is invariant
    of formal degree ``3p``.
    """
    p = ctx.p
    if f.degree >= p:
        raise PreconditionViolated(f"need deg f < {p}, got {f.degree}")
    if not (f + f.reciprocal(p)).is_zero:
        raise PreconditionViolated("f does not satisfy f(x) = -x^p f(1/x)")
    domain = f.domain
    xp = DensePoly.monomial(p, domain)
    shifted = f.compose_affine(-1, 1)
    g = xp * f + (1 - xp) * shifted + xp * (1 - xp) * shifted.reciprocal(p)
    return g.with_formal_degree(3 * p)


def _gf_rank(rows: list[list[int]], ncols: int, p: int) -> int:
    if not rows or ncols == 0:
        return 0
    field = GF(p)
    matrix = DomainMatrix([[field(c) for c in row] for row in rows], (len(rows), ncols), field)
    return matrix.rank()


def lower_third_determines(m: int, p: int) -> bool:
    """Whether an invariant of formal degree ``m`` over ``F_p`` is fixed by its terms of degree ``<= m/3``."""
    if p < 5 or not sympy.isprime(p):
        raise PreconditionViolated(f"need a prime p >= 5, got {p}")
    domain = ResidueRing(p)
    rows = []
    for i in range(m + 1):
        proj = project_invariant(DensePoly.monomial(i, domain).with_formal_degree(m), m)
        rows.append([proj[j] for j in range(m + 1)])
    full = _gf_rank(rows, m + 1, p)
    cut = m // 3 + 1
    lower = _gf_rank([row[:cut] for row in rows], cut, p)
    logger.debug(
        "Invariant space ranks",
        extra={"m": m, "p": p, "dimension": full, "lower_rank": lower},
    )
    return full == lower
