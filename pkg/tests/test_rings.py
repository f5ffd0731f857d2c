import random
from fractions import Fraction

import pytest

from polylog_congruences.arith import PadicContext, reduce
from polylog_congruences.errors import DomainMismatch, FormalDegreeError, PreconditionViolated
from polylog_congruences.rings import (
    DensePoly,
    PadicDomain,
    RationalField,
    ResidueRing,
    eisenstein,
    gaussian,
    golden,
    log_power_series,
    quad_pow,
    series_pow_log,
    sqrt_discriminant,
)

QQ = RationalField()


def test_gaussian_unit():
    i = gaussian(QQ).generator
    assert i * i == -1
    assert i**4 == 1
    assert (i + 1).norm() == 2


def test_sixth_root_of_unity():
    ring = eisenstein(QQ)
    w = ring.generator
    assert w**3 == -1
    assert w**6 == 1
    assert w * w.conj() == 1
    assert sqrt_discriminant(ring) ** 2 == -3


def test_golden_ring():
    ring = golden(QQ)
    phi = ring.generator
    assert phi * phi == phi + 1
    assert sqrt_discriminant(ring) ** 2 == 5
    # phi * conj(phi) = -1
    assert phi.norm() == -1


def test_quadratic_over_padic_base():
    ctx = PadicContext(7, k=2)
    ring = gaussian(PadicDomain(ctx))
    z = ring.element(Fraction(1, 2), 3)
    prod = z * z.conj()
    assert reduce(prod.a, 2) == 37 * pow(4, -1, 49) % 49
    assert reduce(prod.b, 2) == 0


def test_mixing_extensions_fails():
    with pytest.raises(DomainMismatch):
        gaussian(QQ).generator + eisenstein(QQ).generator


def test_negative_power_is_rejected():
    with pytest.raises(PreconditionViolated):
        gaussian(QQ).generator ** -1


def test_poly_arithmetic():
    x = DensePoly.x(QQ)
    assert (x + 1) ** 2 == DensePoly([1, 2, 1], QQ)
    assert (x - x).is_zero
    assert (x + 1) * (x - 1) == x**2 - 1
    assert DensePoly([1, 2, 3], QQ)(2) == 17


def test_poly_strips_trailing_zeros():
    f = DensePoly([1, 0, 0], QQ)
    assert f.degree == 0
    assert DensePoly([], QQ).degree == -1


def test_formal_degree():
    f = DensePoly([1, 2, 3], QQ, 5)
    assert (f * f).formal_degree == 10
    assert (f + DensePoly.x(QQ)).formal_degree == 5
    with pytest.raises(FormalDegreeError):
        DensePoly([1, 1], QQ, 0)


def test_reciprocal_and_shifts():
    f = DensePoly([1, 2, 3], QQ)
    assert f.reciprocal(3) == DensePoly([0, 3, 2, 1], QQ)
    x = DensePoly.x(QQ)
    assert (x**2).compose_affine(-1, 1) == DensePoly([1, -2, 1], QQ)
    assert (x + 1).substitute_power(2) == x**2 + 1
    assert x.at_one_minus_inverse(1) == x - 1
    with pytest.raises(FormalDegreeError):
        f.reciprocal(1)


def test_calculus():
    f = DensePoly([1, 2, 3], QQ)
    assert f.derivative() == DensePoly([2, 6], QQ)
    assert f.derivative().integrate() == f - 1
    assert DensePoly([0, 1, 2], QQ).divide_by_x() == DensePoly([1, 2], QQ)
    with pytest.raises(PreconditionViolated):
        f.divide_by_x()


def test_residue_ring_polynomials():
    ring = ResidueRing(25)
    f = DensePoly([Fraction(1, 2), 5], ring)
    assert f[0] == 13
    assert (f * 5)[1] == 0
    with pytest.raises(DomainMismatch):
        f + DensePoly([1], ResidueRing(7))


def test_change_domain_to_padic():
    ctx = PadicContext(5, k=2)
    f = DensePoly([Fraction(1, 3), 10], QQ).change_domain(PadicDomain(ctx))
    assert reduce(f[1], 2) == 10
    assert reduce(f[0] * 3, 2) == 1


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_log_power_series_two_ways(d):
    assert log_power_series(d, 8) == series_pow_log(d, 8)


def test_log_series_coefficients():
    assert log_power_series(1, 4) == DensePoly(
        [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4)], QQ
    )


def _random_quad(rng: random.Random, ring):
    return ring.element(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))


@pytest.mark.parametrize("factory", [gaussian, eisenstein, golden])
def test_quad_pow_matches_repeated_multiplication(factory):
    rng = random.Random(7)
    ring = factory(ResidueRing(7**3))
    for _ in range(5):
        z = _random_quad(rng, ring)
        acc = ring.one()
        for n in range(65):
            assert quad_pow(z, n) == acc, n
            acc = acc * z


@pytest.mark.parametrize("factory", [gaussian, eisenstein, golden])
def test_conjugation_is_multiplicative(factory):
    rng = random.Random(11)
    ring = factory(QQ)
    for _ in range(50):
        z, w = _random_quad(rng, ring), _random_quad(rng, ring)
        assert (z * w).conj() == z.conj() * w.conj()
        assert (z + w).conj() == z.conj() + w.conj()


@pytest.mark.parametrize("domain", [QQ, ResidueRing(11**2)])
def test_one_minus_x_is_an_involution(domain):
    rng = random.Random(3)
    for degree in range(12):
        f = DensePoly([Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(degree + 1)], domain)
        g = f.compose_affine(-1, 1)
        assert g.compose_affine(-1, 1) == f
        assert g.formal_degree == f.formal_degree
