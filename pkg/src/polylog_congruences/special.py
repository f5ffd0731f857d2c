"""Bernoulli and Euler numbers modulo p, harmonic sums and Lucas numbers."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import cached_property
from typing import Any, Sequence

from polylog_congruences.arith import PadicApprox, PadicContext, inv_mod
from polylog_congruences.errors import IndexOutOfRange, NotInvertible, PreconditionViolated
from polylog_congruences.services.constants_cache import constants_cache

logger = logging.getLogger(__name__)


class SpecialConstants:
    """Factorial, Bernoulli and Euler tables modulo one prime.

    Tables are built on first use and shared through the constants cache.
    """

    def __init__(self, p: int):
        self.p = p

    @cached_property
    def factorials(self) -> tuple[int, ...]:
        p = self.p
        out = [1] * p
        for k in range(1, p):
            out[k] = out[k - 1] * k % p
        return tuple(out)

    @cached_property
    def inverse_factorials(self) -> tuple[int, ...]:
        p = self.p
        out = [1] * p
        out[p - 1] = inv_mod(self.factorials[p - 1], p)
        for k in range(p - 1, 0, -1):
            out[k - 1] = out[k] * k % p
        return tuple(out)

    def binomial(self, n: int, k: int) -> int:
        """``C(n, k) mod p`` for ``0 <= n < p``."""
        if k < 0 or k > n:
            return 0
        return self.factorials[n] * self.inverse_factorials[k] * self.inverse_factorials[n - k] % self.p

    @cached_property
    def bernoulli(self) -> tuple[int, ...]:
        """``B_0 .. B_{p-3}`` modulo p with ``B_1 = -1/2``."""
        p = self.p
        size = max(p - 2, 1)
        table = [0] * size
        table[0] = 1
        for m in range(1, size):
            if m > 1 and m % 2:
                continue
            acc = sum(self.binomial(m + 1, j) * table[j] for j in range(m)) % p
            table[m] = -acc * inv_mod(m + 1, p) % p
        logger.debug("Built Bernoulli table", extra={"p": p, "size": size})
        return tuple(table)

    @cached_property
    def euler(self) -> tuple[int, ...]:
        """``E_0 .. E_{p-3}`` modulo p (odd entries are 0)."""
        p = self.p
        size = max(p - 2, 1)
        table = [0] * size
        table[0] = 1
        for n in range(2, size, 2):
            table[n] = -sum(self.binomial(n, j) * table[j] for j in range(0, n, 2)) % p
        return tuple(table)


def constants_for(p: int) -> SpecialConstants:
    return constants_cache.get_or_build(("special", p), lambda: SpecialConstants(p))


def bernoulli_mod(m: int, p: int) -> int:
    """``B_m mod p``; odd ``m > 1`` gives 0 for every ``p``."""
    if m < 0:
        raise IndexOutOfRange(f"Bernoulli index must be >= 0, got {m}")
    if m > 1 and m % 2:
        return 0
    if m > p - 3:
        raise IndexOutOfRange(f"B_{m} is not p-integral data for p={p} (need m <= p-3)")
    return constants_for(p).bernoulli[m]


def bernoulli_from_harmonic(m: int, p: int) -> int:
    """``B_m mod p`` for even ``2 <= m <= p-3`` from ``H_{p-1}(p-1-m) mod p**2``."""
    if m % 2:
        return 0 if m > 1 else bernoulli_mod(m, p)
    if m < 2 or m > p - 3:
        raise IndexOutOfRange(f"harmonic route needs 2 <= m <= p-3, got m={m}, p={p}")
    d = p - 1 - m
    mod = p * p
    total = sum(pow(inv_mod(r, mod), d, mod) for r in range(1, p)) % mod
    if total % p:
        raise PreconditionViolated(f"H_{{p-1}}({d}) is not divisible by {p}")
    return (d + 1) * inv_mod(d, p) * (total // p) % p


def bernoulli_poly_mod(n: int, x: Fraction | int, p: int) -> int:
    """``B_n(x) mod p`` for ``n <= p-2`` and p-integral ``x``."""
    if n < 0 or n > p - 2:
        raise IndexOutOfRange(f"Bernoulli polynomial index must be in [0, {p - 2}], got {n}")
    xm = _residue(x, p)
    table = constants_for(p)
    return sum(
        table.binomial(n, k) * bernoulli_mod(k, p) * pow(xm, n - k, p) for k in range(n + 1)
    ) % p


def bernoulli_poly_difference(n: int, x: Fraction | int, y: Fraction | int, p: int) -> int:
    """``B_n(x) - B_n(y) mod p`` for ``n <= p-1``; ``B_n`` itself never appears."""
    if n < 1 or n > p - 1:
        raise IndexOutOfRange(f"difference index must be in [1, {p - 1}], got {n}")
    xm, ym = _residue(x, p), _residue(y, p)
    table = constants_for(p)
    return sum(
        table.binomial(n, k) * bernoulli_mod(k, p) * (pow(xm, n - k, p) - pow(ym, n - k, p))
        for k in range(n)
    ) % p


def euler_mod(n: int, p: int) -> int:
    """``E_n mod p`` for even ``n <= p-3``."""
    if n % 2:
        raise PreconditionViolated(f"Euler numbers are tabulated for even indices, got {n}")
    if n < 0 or n > p - 3:
        raise IndexOutOfRange(f"Euler index must be in [0, {p - 3}], got {n}")
    return constants_for(p).euler[n]


def _residue(x: Fraction | int, p: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotInvertible(f"{x} is not {p}-integral")
    return x.numerator * inv_mod(x.denominator, p) % p


# -- harmonic sums --------------------------------------------------------------


def harmonic(n: int, d: int, ctx: PadicContext) -> PadicApprox:
    """``H_n(d) = sum_{r<=n} r**-d``."""
    if n < 0 or d < 1:
        raise PreconditionViolated(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    p = ctx.p
    if n < p:
        weights = ctx.inverse_powers(d)
        return ctx.residue(sum(weights[1 : n + 1]), ctx.precision)
    total = ctx.exact_zero
    for r in range(1, n + 1):
        total = total + Fraction(1, r**d)
    return total


def mhs(pattern: Sequence[int], upper: int, ctx: PadicContext, x: Any = None) -> Any:
    """Multiple harmonic sum ``sum x**k_d / (k_1**e_1 ... k_d**e_d)`` over ``0 < k_1 < ... < k_d <= upper``.

    ``x`` may be any ring element (a p-adic number, a quadratic element or a
    polynomial); without it the sum is the plain multiple harmonic sum.
    """
    if not pattern or any(e < 1 for e in pattern):
        raise PreconditionViolated(f"exponent pattern must be non-empty and positive: {pattern}")
    depth = len(pattern)
    one = ctx.one if x is None else x**0
    zero = one * 0
    acc = [one] + [zero] * depth
    power = one
    for k in range(1, upper + 1):
        if x is not None:
            power = power * x
        for i in range(depth, 0, -1):
            term = acc[i - 1] * Fraction(1, k ** pattern[i - 1])
            if i == depth and x is not None:
                term = term * power
            acc[i] = acc[i] + term
    return acc[depth]


# -- Lucas sequences ------------------------------------------------------------


def fibonacci_pair(n: int, modulus: int | None = None) -> tuple[int, int]:
    """``(F_n, F_{n+1})`` by fast doubling, exact when ``modulus`` is None."""
    if n < 0:
        raise PreconditionViolated(f"index must be >= 0, got {n}")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        a, b = (d, c + d) if bit == "1" else (c, d)
        if modulus is not None:
            a, b = a % modulus, b % modulus
    return a, b


def lucas_numbers(n: int, ctx: PadicContext | None = None) -> tuple[int, int]:
    """``(F_n, L_n)``, reduced modulo ``p**(k+g)`` when a context is given."""
    modulus = ctx.modulus if ctx is not None else None
    f, g = fibonacci_pair(n, modulus)
    lucas = 2 * g - f
    if modulus is not None:
        lucas %= modulus
    return f, lucas


def lucas_quotient(ctx: PadicContext) -> PadicApprox:
    """``q_L = (L_p - 1) / p``."""
    p, n = ctx.p, ctx.precision
    modulus = p ** (n + 1)
    f, g = fibonacci_pair(p, modulus)
    lucas = (2 * g - f) % modulus
    return ctx.residue((lucas - 1) // p, n)


# -- residue classes ------------------------------------------------------------


def residue_class_sum(r: int, m: int, d: int, p: int) -> int:
    """``sum_{0<k<p, k = r (mod m)} k**-d mod p``."""
    return sum(pow(inv_mod(k, p), d, p) for k in range(1, p) if (k - r) % m == 0) % p


def residue_class_formula(r: int, m: int, d: int, p: int) -> int:
    """Closed form of :func:`residue_class_sum` through Bernoulli polynomials."""
    if p <= d + 3 or m % p == 0:
        raise PreconditionViolated(f"closed form needs p > d+3 and p not dividing m (p={p})")
    x = Fraction(r % m, m)
    y = Fraction((r - p) % m, m)
    diff = bernoulli_poly_difference(p - d, x, y, p)
    return diff * inv_mod(d * m**d, p) % p
