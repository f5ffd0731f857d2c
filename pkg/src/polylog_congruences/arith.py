"""Exact modular helpers and truncated p-adic arithmetic with valuation tracking.

A :class:`PadicApprox` stores a nonzero p-adic number as ``u * p**v`` where the
unit ``u`` is known modulo ``p**r`` with ``r = N - lost`` and ``N = k + g`` the
working precision of its :class:`PadicContext`. The absolute precision of the
value is therefore ``v + r``: every digit below that exponent is exact.

Zero is represented explicitly. An *exact* zero absorbs multiplication and is
the neutral element of addition; an *inexact* zero only records that the value
is divisible by ``p**floor``, where ``floor`` is its absolute precision.

Cancellation in sums never raises. Precision is accounted for absolutely and
:func:`reduce` refuses to produce a residue modulo ``p**j`` from a value whose
absolute precision is below ``j``.
"""

from __future__ import annotations

import logging
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Union

import sympy

from polylog_congruences.errors import (
    DivisionByZero,
    DomainMismatch,
    NegativeValuation,
    NotInvertible,
    PrecisionExhausted,
    PreconditionViolated,
)

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def inv_mod(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` in ``[1, m)``."""
    if m < 2:
        raise PreconditionViolated(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible modulo {m}") from None


def split_valuation(n: int, p: int) -> tuple[int, int]:
    """Return ``(v, n / p**v)`` for a nonzero integer ``n``."""
    if n == 0:
        raise PreconditionViolated("the valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def valuation(q: Rational, p: int) -> int:
    """p-adic valuation of a nonzero rational number."""
    q = Fraction(q)
    return split_valuation(q.numerator, p)[0] - split_valuation(q.denominator, p)[0]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p < 3 or p % 2 == 0:
        raise PreconditionViolated(f"p must be an odd prime, got {p}")
    if a % p == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class PadicContext:
    """Prime, target precision ``k`` and guard digits ``g``.

    Arithmetic is carried modulo ``p**(k + g)``.
    """

    p: int
    k: int = 1
    g: int = 2

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or not sympy.isprime(self.p):
            raise PreconditionViolated(f"p must be an odd prime, got {self.p}")
        if self.k < 1:
            raise PreconditionViolated(f"target precision k must be >= 1, got {self.k}")
        if self.g < 0:
            raise PreconditionViolated(f"guard digits g must be >= 0, got {self.g}")

    @property
    def precision(self) -> int:
        return self.k + self.g

    @cached_property
    def modulus(self) -> int:
        return self.p**self.precision

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        """``inv(k) mod p**(k+g)`` for ``0 < k < p`` (index 0 holds 0).

        One modular inversion and two passes of prefix products.
        """
        p, m = self.p, self.modulus
        prefix = [1] * p
        for k in range(1, p):
            prefix[k] = prefix[k - 1] * k % m
        running = inv_mod(prefix[p - 1], m)
        out = [0] * p
        for k in range(p - 1, 0, -1):
            out[k] = running * prefix[k - 1] % m
            running = running * k % m
        return tuple(out)

    def inverse_powers(self, d: int) -> tuple[int, ...]:
        """``inv(k)**d mod p**(k+g)`` for ``0 < k < p`` (index 0 holds 0)."""
        return _inverse_powers(self, d)

    def of(self, value: Rational | PadicApprox) -> PadicApprox:
        if isinstance(value, PadicApprox):
            if value.ctx != self:
                raise DomainMismatch(f"value belongs to {value.ctx}, not {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return padic_of_rational(value, self)
        raise DomainMismatch(f"cannot interpret {type(value).__name__} as a p-adic number")

    def unit(self, u: int) -> PadicApprox:
        """A unit known to full working precision."""
        u %= self.modulus
        if u % self.p == 0:
            raise PreconditionViolated(f"{u} is not a unit modulo {self.p}")
        return PadicApprox(self, 0, u, 0)

    def residue(self, value: int, prec: int) -> PadicApprox:
        """An integer known only modulo ``p**prec``."""
        p, n = self.p, self.precision
        value %= p**prec
        if value == 0:
            return PadicApprox.zero(self, prec)
        v, u = split_valuation(value, p)
        r = min(prec - v, n)
        return PadicApprox(self, v, u % p**r, n - r)

    @property
    def exact_zero(self) -> PadicApprox:
        return PadicApprox.zero(self)

    @property
    def one(self) -> PadicApprox:
        return PadicApprox(self, 0, 1, 0)


@lru_cache(maxsize=256)
def _inverse_powers(ctx: PadicContext, d: int) -> tuple[int, ...]:
    m = ctx.modulus
    return tuple(pow(inv, d, m) if inv else 0 for inv in ctx.inverses)


class PadicApprox:
    """Immutable truncated p-adic number; see the module docstring."""

    __slots__ = ("ctx", "v", "u", "lost")

    def __init__(self, ctx: PadicContext, v: int | None, u: int, lost: int) -> None:
        self.ctx = ctx
        self.v = v
        self.u = u
        self.lost = lost

    @classmethod
    def zero(cls, ctx: PadicContext, floor: int | None = None) -> PadicApprox:
        """Zero; ``floor=None`` is the exact zero."""
        return cls(ctx, floor, 0, ctx.precision if floor is not None else 0)

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.u == 0

    @property
    def is_exact_zero(self) -> bool:
        return self.u == 0 and self.v is None

    @property
    def relative_precision(self) -> int:
        return self.ctx.precision - self.lost

    @property
    def absolute_precision(self) -> float | int:
        if self.u == 0:
            return float("inf") if self.v is None else self.v
        return self.v + self.relative_precision

    def __repr__(self) -> str:
        if self.is_exact_zero:
            return f"PadicApprox(0, p={self.ctx.p})"
        if self.is_zero:
            return f"PadicApprox(O({self.ctx.p}^{self.v}))"
        return (
            f"PadicApprox({self.u}*{self.ctx.p}^{self.v} + "
            f"O({self.ctx.p}^{self.absolute_precision}))"
        )

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: object) -> PadicApprox | None:
        if isinstance(other, PadicApprox):
            if other.ctx != self.ctx:
                raise DomainMismatch(f"mixing p-adic contexts {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            return padic_of_rational(other, self.ctx)
        return None

    def __neg__(self) -> PadicApprox:
        if self.u == 0:
            return self
        r = self.relative_precision
        return PadicApprox(self.ctx, self.v, -self.u % self.ctx.p**r, self.lost)

    def __add__(self, other: object) -> PadicApprox:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other: object) -> PadicApprox:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _add(self, -other)

    def __rsub__(self, other: object) -> PadicApprox:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _add(other, -self)

    def __mul__(self, other: object) -> PadicApprox:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> PadicApprox:
        if self.is_exact_zero:
            raise DivisionByZero("division by an exact zero")
        if self.u == 0:
            raise PrecisionExhausted(
                f"cannot invert a value known only modulo {self.ctx.p}^{self.v}"
            )
        r = self.relative_precision
        return PadicApprox(self.ctx, -self.v, inv_mod(self.u, self.ctx.p**r), self.lost)

    def __truediv__(self, other: object) -> PadicApprox:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _mul(self, other.inverse())

    def __rtruediv__(self, other: object) -> PadicApprox:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _mul(other, self.inverse())

    def __pow__(self, n: int) -> PadicApprox:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return self.ctx.one
        if self.u == 0:
            if self.v is None:
                return self
            return PadicApprox.zero(self.ctx, self.v * n)
        r = self.relative_precision
        return PadicApprox(self.ctx, self.v * n, pow(self.u, n, self.ctx.p**r), self.lost)

    def shift(self, j: int) -> PadicApprox:
        """Multiplication by ``p**j`` (exact)."""
        if self.u == 0:
            return self if self.v is None else PadicApprox.zero(self.ctx, self.v + j)
        return PadicApprox(self.ctx, self.v + j, self.u, self.lost)


def _add(x: PadicApprox, y: PadicApprox) -> PadicApprox:
    if x.is_exact_zero:
        return y
    if y.is_exact_zero:
        return x
    ctx = x.ctx
    p, n = ctx.p, ctx.precision
    target = min(x.absolute_precision, y.absolute_precision)
    if x.u == 0 or y.u == 0:
        value = y if x.u == 0 else x
        if value.u == 0 or target <= value.v:
            return PadicApprox.zero(ctx, target)
        r = target - value.v
        return PadicApprox(ctx, value.v, value.u % p**r, n - r)
    base = min(x.v, y.v)
    total = (x.u * p ** (x.v - base) + y.u * p ** (y.v - base)) % p ** (target - base)
    if total == 0:
        return PadicApprox.zero(ctx, target)
    w, u = split_valuation(total, p)
    v = base + w
    r = target - v
    return PadicApprox(ctx, v, u % p**r, n - r)


def _mul(x: PadicApprox, y: PadicApprox) -> PadicApprox:
    ctx = x.ctx
    if x.is_exact_zero or y.is_exact_zero:
        return ctx.exact_zero
    if x.u == 0 or y.u == 0:
        # for an inexact zero v is its floor
        return PadicApprox.zero(ctx, x.v + y.v)
    lost = max(x.lost, y.lost)
    r = ctx.precision - lost
    return PadicApprox(ctx, x.v + y.v, x.u * y.u % ctx.p**r, lost)


def padic_of_rational(q: Rational, ctx: PadicContext) -> PadicApprox:
    """Convert an exact rational to full working precision."""
    q = Fraction(q)
    if q == 0:
        return ctx.exact_zero
    p, m = ctx.p, ctx.modulus
    vn, num = split_valuation(q.numerator, p)
    vd, den = split_valuation(q.denominator, p)
    return PadicApprox(ctx, vn - vd, num * inv_mod(den, m) % m, 0)


def reduce(x: PadicApprox, j: int) -> int:
    """Residue of a p-integral value modulo ``p**j``."""
    p = x.ctx.p
    if x.u == 0:
        if x.v is None or x.v >= j:
            return 0
        raise PrecisionExhausted(
            f"value is only known modulo {p}^{x.v}, residue mod {p}^{j} requested"
        )
    if x.v < 0:
        raise NegativeValuation(f"value has {p}-adic valuation {x.v} and is not {p}-integral")
    if x.v >= j:
        return 0
    if x.absolute_precision < j:
        raise PrecisionExhausted(
            f"value is only known modulo {p}^{x.absolute_precision}, "
            f"residue mod {p}^{j} requested"
        )
    return x.u * p**x.v % p**j


def fermat_quotient(a: int, ctx: PadicContext) -> PadicApprox:
    """``(a**(p-1) - 1) / p`` known modulo ``p**(k+g)``."""
    p = ctx.p
    if a % p == 0:
        raise NotInvertible(f"Fermat quotient undefined: {p} divides {a}")
    n = ctx.precision
    power = pow(a, p - 1, p ** (n + 1))
    return ctx.residue((power - 1) // p, n)


# -- expression trees ---------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: Rational | PadicApprox


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Power:
    base: Expr
    exponent: int


Expr = Union[Const, BinOp, Power]

_OPERATORS: dict[str, Callable] = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": operator.truediv,
}


def padic_eval(expr: Expr, ctx: PadicContext) -> PadicApprox:
    """Evaluate an expression tree in truncated p-adic arithmetic."""
    match expr:
        case Const(value):
            return ctx.of(value)
        case BinOp(op, left, right):
            try:
                func = _OPERATORS[op]
            except KeyError:
                raise PreconditionViolated(f"Unknown operator '{op}'") from None
            return func(padic_eval(left, ctx), padic_eval(right, ctx))
        case Power(base, exponent):
            return padic_eval(base, ctx) ** exponent
    raise PreconditionViolated(f"not an expression node: {expr!r}")


def exact_eval(expr: Expr) -> Fraction:
    """Evaluate an expression tree over the rationals (the oracle path)."""
    match expr:
        case Const(value):
            if isinstance(value, PadicApprox):
                raise PreconditionViolated("p-adic leaves have no exact value")
            return Fraction(value)
        case BinOp(op, left, right):
            lhs, rhs = exact_eval(left), exact_eval(right)
            if op == "/" and rhs == 0:
                raise DivisionByZero("division by an exact zero")
            try:
                return _OPERATORS[op](lhs, rhs)
            except KeyError:
                raise PreconditionViolated(f"Unknown operator '{op}'") from None
        case Power(base, exponent):
            value = exact_eval(base)
            if value == 0 and exponent < 0:
                raise DivisionByZero("negative power of zero")
            return value**exponent
    raise PreconditionViolated(f"not an expression node: {expr!r}")
