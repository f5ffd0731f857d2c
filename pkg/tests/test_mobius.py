import random
from collections import Counter
from fractions import Fraction

import pytest
from sympy import primerange
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from polylog_congruences.arith import PadicContext
from polylog_congruences.errors import FormalDegreeError, PreconditionViolated
from polylog_congruences.mobius import (
    GROUP,
    INFINITY,
    MobiusElement,
    act,
    apply_point,
    build_3p_invariant,
    compose,
    invariant_from,
    is_invariant,
    lower_third_determines,
    orbit,
    orbit_sizes,
    project_invariant,
)
from polylog_congruences.rings import DensePoly, RationalField, ResidueRing

QQ = RationalField()
R, S = MobiusElement.R, MobiusElement.S


def test_group_relations():
    assert compose(R, R) is MobiusElement.IDENTITY
    assert compose(S, S) is MobiusElement.IDENTITY
    assert compose(R, S) is MobiusElement.RS
    assert compose(S, R) is MobiusElement.SR
    assert compose(MobiusElement.RS, R) is MobiusElement.RSR
    # (RS)^3 = 1
    rs = MobiusElement.RS
    assert compose(rs, compose(rs, rs)) is MobiusElement.IDENTITY


def test_composition_is_closed():
    for g in GROUP:
        for h in GROUP:
            assert compose(g, h) in GROUP


def test_apply_point():
    assert apply_point(R, 0, 7) is INFINITY
    assert apply_point(R, INFINITY, 7) == 0
    assert apply_point(R, 3, 7) == 5
    assert apply_point(S, 3, 7) == 5
    assert apply_point(S, INFINITY, 7) is INFINITY
    # RS(2) = R(1 - 2) = 1/(-1)
    assert apply_point(MobiusElement.RS, 2, 7) == 6


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_orbit_of_zero(p):
    assert orbit(0, p) == frozenset({0, 1, INFINITY})


@pytest.mark.parametrize(
    "p,expected",
    [
        (5, Counter({3: 2})),
        (7, Counter({3: 2, 2: 1})),
        (11, Counter({3: 2, 6: 1})),
        (13, Counter({3: 2, 2: 1, 6: 1})),
    ],
)
def test_orbit_sizes(p, expected):
    assert orbit_sizes(p) == expected


@pytest.mark.parametrize("p", list(primerange(17, 62)))
def test_orbit_sizes_cover_projective_line(p):
    sizes = orbit_sizes(p)
    assert sum(size * count for size, count in sizes.items()) == p + 1
    assert sizes[3] == 2
    assert sizes[2] == (1 if p % 3 == 1 else 0)


def test_orbit_needs_prime_at_least_five():
    with pytest.raises(PreconditionViolated):
        orbit(0, 3)
    with pytest.raises(PreconditionViolated):
        orbit(0, 9)


def test_action_on_polynomials():
    x = DensePoly.x(QQ)
    assert act(R, x, 1) == DensePoly.constant(-1, QQ)
    assert act(S, x, 1) == 1 - x
    assert act(R, x, 2) == x
    f = DensePoly([1, 2, 3], QQ)
    for g in GROUP:
        for h in GROUP:
            assert act(g, act(h, f, 4), 4) == act(compose(g, h), f, 4)


def test_action_below_degree_fails():
    with pytest.raises(FormalDegreeError):
        act(R, DensePoly([1, 2, 3], QQ), 1)


@pytest.mark.parametrize("m", [2, 3, 5, 6])
def test_projection_is_invariant(m):
    f = DensePoly([Fraction(1, 2), 3, -1], QQ)
    g = project_invariant(f, m)
    assert is_invariant(g, m)
    assert project_invariant(g, m) == g


def test_projection_needs_six_invertible():
    with pytest.raises(PreconditionViolated):
        project_invariant(DensePoly([1, 1], ResidueRing(3)), 2)


def test_invariant_from_r_invariant():
    x = DensePoly.x(QQ)
    g = invariant_from(1 + x**2, 2)
    assert is_invariant(g, 2)
    with pytest.raises(PreconditionViolated):
        invariant_from(DensePoly.constant(1, QQ), 2)


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("m", list(range(1, 19)))
def test_lower_third_determines(p, m):
    assert lower_third_determines(m, p)


def test_lower_third_needs_prime():
    with pytest.raises(PreconditionViolated):
        lower_third_determines(6, 3)


@pytest.mark.parametrize("p", [7, 11, 13])
def test_invariant_vanishing_through_lower_third_is_zero(p):
    m = 3 * p
    cut = m // 3 + 1
    rng = random.Random(p)
    domain = ResidueRing(p)
    invariants = [
        project_invariant(DensePoly([rng.randrange(p) for _ in range(m + 1)], domain, m), m)
        for _ in range(cut + 5)
    ]
    field = GF(p)
    lower = DomainMatrix(
        [[field(g[j]) for g in invariants] for j in range(cut)], (cut, len(invariants)), field
    )
    # every combination killing the low coefficients
    basis = lower.nullspace().to_Matrix()
    assert basis.rows >= 5
    for r in range(basis.rows):
        combination = DensePoly.constant(0, domain)
        for c, g in zip(basis.row(r), invariants):
            combination = combination + g * (int(c) % p)
        assert combination.is_zero


@pytest.mark.parametrize("p", [5, 7, 11])
def test_3p_invariant(p):
    ring = ResidueRing(p)
    x = DensePoly.x(ring)
    f = x - x ** (p - 1)
    g = build_3p_invariant(f, PadicContext(p))
    assert g.formal_degree == 3 * p
    assert is_invariant(g, 3 * p)
    shifted = f.compose_affine(-1, 1)
    for i in range(p + 1):
        assert g[i] == shifted[i]


def test_3p_invariant_preconditions():
    p = 5
    ring = ResidueRing(p)
    x = DensePoly.x(ring)
    with pytest.raises(PreconditionViolated):
        build_3p_invariant(x**p, PadicContext(p))
    with pytest.raises(PreconditionViolated):
        build_3p_invariant(x, PadicContext(p))
