"""Coefficient domains, quadratic extensions and dense univariate polynomials.

Every ring element carries its domain. Binary operations on elements of
different domains raise :class:`DomainMismatch`; plain ``int`` and
``Fraction`` operands are coerced into the domain of the other operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable

from polylog_congruences.arith import PadicApprox, PadicContext, Rational, inv_mod
from polylog_congruences.errors import DomainMismatch, FormalDegreeError, PreconditionViolated

# -- coefficient domains ------------------------------------------------------


@dataclass(frozen=True)
class RationalField:
    """Exact rationals."""

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise DomainMismatch(f"cannot coerce {type(value).__name__} into QQ")

    def normalize(self, value: Fraction) -> Fraction:
        return value

    def is_zero(self, value: Fraction) -> bool:
        return value == 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class ResidueRing:
    """Integers modulo ``modulus``; elements are ints in ``[0, modulus)``."""

    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise PreconditionViolated(f"modulus must be >= 2, got {self.modulus}")

    def coerce(self, value: Any) -> int:
        if isinstance(value, int):
            return value % self.modulus
        if isinstance(value, Fraction):
            return value.numerator * inv_mod(value.denominator, self.modulus) % self.modulus
        raise DomainMismatch(f"cannot coerce {type(value).__name__} into {self}")

    def normalize(self, value: int) -> int:
        return value % self.modulus

    def is_zero(self, value: int) -> bool:
        return value % self.modulus == 0

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1 % self.modulus

    @property
    def characteristic(self) -> int:
        return self.modulus

    def __str__(self) -> str:
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class PadicDomain:
    """Truncated p-adic numbers of one context."""

    ctx: PadicContext

    def coerce(self, value: Any) -> PadicApprox:
        return self.ctx.of(value)

    def normalize(self, value: PadicApprox) -> PadicApprox:
        return value

    def is_zero(self, value: PadicApprox) -> bool:
        return value.is_exact_zero

    def zero(self) -> PadicApprox:
        return self.ctx.exact_zero

    def one(self) -> PadicApprox:
        return self.ctx.one

    @property
    def characteristic(self) -> int:
        return 0

    def __str__(self) -> str:
        return f"Q_{self.ctx.p}/{self.ctx.p}^{self.ctx.precision}"


@dataclass(frozen=True)
class QuadExt:
    """``base[alpha] / (alpha**2 - P*alpha + Q)``."""

    base: Any
    P: Rational
    Q: Rational
    name: str = "a"

    def coerce(self, value: Any) -> QuadElem:
        if isinstance(value, QuadElem):
            if value.ext != self:
                raise DomainMismatch(f"element of {value.ext} used in {self}")
            return value
        return QuadElem(self.base.coerce(value), self.base.zero(), self)

    def normalize(self, value: QuadElem) -> QuadElem:
        return value

    def is_zero(self, value: QuadElem) -> bool:
        return self.base.is_zero(value.a) and self.base.is_zero(value.b)

    def zero(self) -> QuadElem:
        return QuadElem(self.base.zero(), self.base.zero(), self)

    def one(self) -> QuadElem:
        return QuadElem(self.base.one(), self.base.zero(), self)

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @cached_property
    def _p(self) -> Any:
        return self.base.coerce(self.P)

    @cached_property
    def _q(self) -> Any:
        return self.base.coerce(self.Q)

    @property
    def generator(self) -> QuadElem:
        return QuadElem(self.base.zero(), self.base.one(), self)

    def element(self, a: Any, b: Any = 0) -> QuadElem:
        return QuadElem(self.base.coerce(a), self.base.coerce(b), self)

    def __str__(self) -> str:
        return f"{self.base}[{self.name}]/({self.name}^2-{self.P}{self.name}+{self.Q})"


def gaussian(base: Any) -> QuadExt:
    """``i`` with ``i**2 = -1``."""
    return QuadExt(base, 0, 1, "i")


def eisenstein(base: Any) -> QuadExt:
    """The primitive sixth root of unity ``w`` with ``w**2 = w - 1``."""
    return QuadExt(base, 1, 1, "w")


def golden(base: Any) -> QuadExt:
    """The golden ratio ``phi`` with ``phi**2 = phi + 1``."""
    return QuadExt(base, 1, -1, "phi")


def sqrt_discriminant(ext: QuadExt) -> QuadElem:
    """``2*alpha - P``, a square root of ``P**2 - 4Q`` (``i*sqrt(3)`` for the
    sixth-root ring, ``sqrt(5)`` for the golden ring)."""
    return ext.generator * 2 - ext.P


class QuadElem:
    """``a + b*alpha`` in a :class:`QuadExt`."""

    __slots__ = ("a", "b", "ext")

    def __init__(self, a: Any, b: Any, ext: QuadExt) -> None:
        self.a = a
        self.b = b
        self.ext = ext

    def __repr__(self) -> str:
        return f"({self.a!r} + {self.b!r}*{self.ext.name})"

    def _lift(self, other: object) -> QuadElem | None:
        if isinstance(other, QuadElem):
            if other.ext != self.ext:
                raise DomainMismatch(f"mixing {self.ext} and {other.ext}")
            return other
        if isinstance(other, (int, Fraction, PadicApprox)):
            return self.ext.coerce(other)
        return None

    def _make(self, a: Any, b: Any) -> QuadElem:
        norm = self.ext.base.normalize
        return QuadElem(norm(a), norm(b), self.ext)

    def __add__(self, other: object) -> QuadElem:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._make(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return self._make(-self.a, -self.b)

    def __sub__(self, other: object) -> QuadElem:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._make(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: object) -> QuadElem:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: object) -> QuadElem:
        if isinstance(other, (int, Fraction, PadicApprox)):
            s = self.ext.base.coerce(other)
            return self._make(self.a * s, self.b * s)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return self._make(a * c - bd * self.ext._q, a * d + b * c + bd * self.ext._p)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadElem:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise PreconditionViolated("negative powers are not supported in quadratic rings")
        result, base = self.ext.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadElem:
        """The image under ``alpha -> P - alpha``."""
        return self._make(self.a + self.b * self.ext._p, -self.b)

    def norm(self) -> Any:
        a, b = self.a, self.b
        return self.ext.base.normalize(a * a + a * b * self.ext._p + b * b * self.ext._q)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ext.coerce(other)
        if not isinstance(other, QuadElem) or other.ext != self.ext:
            return NotImplemented
        return self.ext.is_zero(self - other)

    __hash__ = None  # type: ignore[assignment]


def quad_pow(x: QuadElem, n: int) -> QuadElem:
    return x**n


# -- polynomials --------------------------------------------------------------


class DensePoly:
    """Immutable dense polynomial over a coefficient domain.

    ``formal_degree`` is an upper bound on the degree that is preserved by the
    ring operations (max for sums, sum for products) and used as the default
    ``m`` of :meth:`reciprocal`.
    """

    __slots__ = ("coefficients", "domain", "formal_degree")

    def __init__(
        self,
        coefficients: Iterable[Any],
        domain: Any,
        formal_degree: int | None = None,
    ) -> None:
        coeffs = [domain.coerce(c) for c in coefficients]
        while coeffs and domain.is_zero(coeffs[-1]):
            coeffs.pop()
        self.coefficients: tuple[Any, ...] = tuple(coeffs)
        self.domain = domain
        degree = len(coeffs) - 1
        if formal_degree is None:
            formal_degree = max(degree, 0)
        if formal_degree < degree:
            raise FormalDegreeError(
                f"formal degree {formal_degree} is below the actual degree {degree}"
            )
        self.formal_degree = formal_degree

    @classmethod
    def _raw(cls, coeffs: list[Any], domain: Any, formal_degree: int) -> DensePoly:
        poly = cls.__new__(cls)
        while coeffs and domain.is_zero(coeffs[-1]):
            coeffs.pop()
        poly.coefficients = tuple(coeffs)
        poly.domain = domain
        poly.formal_degree = max(formal_degree, len(coeffs) - 1, 0)
        return poly

    @classmethod
    def x(cls, domain: Any) -> DensePoly:
        return cls([0, 1], domain)

    @classmethod
    def constant(cls, c: Any, domain: Any) -> DensePoly:
        return cls([c], domain, 0)

    @classmethod
    def monomial(cls, n: int, domain: Any, c: Any = 1) -> DensePoly:
        return cls([0] * n + [c], domain, n)

    # -- inspection -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Actual degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, i: int) -> Any:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return self.domain.zero()

    def __repr__(self) -> str:
        return f"DensePoly({list(self.coefficients)!r}, {self.domain}, fd={self.formal_degree})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DensePoly.constant(other, self.domain)
        if not isinstance(other, DensePoly):
            return NotImplemented
        if other.domain != self.domain:
            return False
        return (self - other).is_zero

    __hash__ = None  # type: ignore[assignment]

    def with_formal_degree(self, m: int) -> DensePoly:
        if m < self.degree:
            raise FormalDegreeError(f"formal degree {m} is below the actual degree {self.degree}")
        return DensePoly._raw(list(self.coefficients), self.domain, m)

    # -- ring operations ------------------------------------------------------

    def _lift(self, other: object) -> DensePoly | None:
        if isinstance(other, DensePoly):
            if other.domain != self.domain:
                raise DomainMismatch(f"mixing polynomials over {self.domain} and {other.domain}")
            return other
        try:
            return DensePoly._raw([self.domain.coerce(other)], self.domain, 0)
        except DomainMismatch:
            return None

    def __add__(self, other: object) -> DensePoly:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        f, g = self.coefficients, other.coefficients
        if len(f) < len(g):
            f, g = g, f
        norm = self.domain.normalize
        out = [norm(a + b) for a, b in zip(f, g)]
        out.extend(f[len(g):])
        return DensePoly._raw(out, self.domain, max(self.formal_degree, other.formal_degree))

    __radd__ = __add__

    def __neg__(self) -> DensePoly:
        norm = self.domain.normalize
        return DensePoly._raw([norm(-c) for c in self.coefficients], self.domain, self.formal_degree)

    def __sub__(self, other: object) -> DensePoly:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> DensePoly:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> DensePoly:
        if not isinstance(other, DensePoly):
            try:
                s = self.domain.coerce(other)
            except DomainMismatch:
                return NotImplemented
            norm = self.domain.normalize
            return DensePoly._raw(
                [norm(c * s) for c in self.coefficients], self.domain, self.formal_degree
            )
        other = self._lift(other)
        fd = self.formal_degree + other.formal_degree
        f, g = self.coefficients, other.coefficients
        if not f or not g:
            return DensePoly._raw([], self.domain, fd)
        if isinstance(self.domain, ResidueRing):
            out = [0] * (len(f) + len(g) - 1)
            for i, a in enumerate(f):
                if a:
                    for j, b in enumerate(g):
                        out[i + j] += a * b
            m = self.domain.modulus
            return DensePoly._raw([c % m for c in out], self.domain, fd)
        zero = self.domain.zero()
        out = [zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
        norm = self.domain.normalize
        return DensePoly._raw([norm(c) for c in out], self.domain, fd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> DensePoly:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = DensePoly._raw([self.domain.one()], self.domain, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x: Any) -> Any:
        """Horner evaluation; ``int``/``Fraction`` arguments are coerced first."""
        if isinstance(x, (int, Fraction)):
            x = self.domain.coerce(x)
            norm = self.domain.normalize
        else:
            norm = _identity
        if not self.coefficients:
            return self.domain.zero()
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = norm(acc * x + c)
        return norm(acc)

    evaluate = __call__

    # -- transformations --------------------------------------------------------

    def compose_affine(self, a: Rational, b: Rational) -> DensePoly:
        """``f(a*x + b)``; the formal degree is kept."""
        linear = DensePoly([b, a], self.domain)
        result = DensePoly._raw([], self.domain, 0)
        for c in reversed(self.coefficients):
            result = result * linear + c
        return result.with_formal_degree(self.formal_degree)

    def substitute_power(self, m: int) -> DensePoly:
        """``f(x**m)``."""
        if m < 1:
            raise PreconditionViolated(f"power must be >= 1, got {m}")
        out = [self.domain.zero()] * (m * self.degree + 1) if self.coefficients else []
        for i, c in enumerate(self.coefficients):
            out[i * m] = c
        return DensePoly._raw(out, self.domain, self.formal_degree * m)

    def reciprocal(self, m: int | None = None) -> DensePoly:
        """``x**m * f(1/x)``."""
        if m is None:
            m = self.formal_degree
        if m < self.degree:
            raise FormalDegreeError(f"reciprocal order {m} is below the degree {self.degree}")
        out = [self[m - i] for i in range(m + 1)]
        return DensePoly._raw(out, self.domain, m)

    def at_one_minus_inverse(self, m: int | None = None) -> DensePoly:
        """``x**m * f(1 - 1/x)``."""
        return self.compose_affine(-1, 1).reciprocal(m)

    def truncate(self, n: int) -> DensePoly:
        """Drop every term of degree ``>= n``."""
        return DensePoly._raw(list(self.coefficients[:n]), self.domain, self.formal_degree)

    def derivative(self) -> DensePoly:
        norm = self.domain.normalize
        out = [norm(c * i) for i, c in enumerate(self.coefficients)][1:]
        return DensePoly._raw(out, self.domain, max(self.formal_degree - 1, 0))

    def integrate(self) -> DensePoly:
        """Antiderivative vanishing at 0."""
        out = [self.domain.zero()]
        norm = self.domain.normalize
        coerce = self.domain.coerce
        for i, c in enumerate(self.coefficients):
            out.append(norm(c * coerce(Fraction(1, i + 1))))
        return DensePoly._raw(out, self.domain, self.formal_degree + 1)

    def divide_by_x(self) -> DensePoly:
        if self.coefficients and not self.domain.is_zero(self.coefficients[0]):
            raise PreconditionViolated("polynomial has a nonzero constant term")
        return DensePoly._raw(
            list(self.coefficients[1:]), self.domain, max(self.formal_degree - 1, 0)
        )

    def change_domain(self, domain: Any) -> DensePoly:
        return DensePoly(
            [_recoerce(c, domain) for c in self.coefficients], domain, self.formal_degree
        )


def _identity(value: Any) -> Any:
    return value


def _recoerce(value: Any, domain: Any) -> Any:
    if isinstance(value, int) and isinstance(domain, ResidueRing):
        return value % domain.modulus
    return domain.coerce(value)


TruncatedSeries = DensePoly


# -- series ---------------------------------------------------------------------


def series_pow_log(d: int, n: int) -> DensePoly:
    """Coefficients ``[y**d] binom(y, k)`` for ``k <= n`` as a polynomial in ``x``.

    This is the truncated series of ``log(1 + x)**d / d!``.
    """
    if d < 0 or n < 0:
        raise PreconditionViolated("d and n must be non-negative")
    qq = RationalField()
    y = DensePoly.x(qq)
    falling = DensePoly.constant(1, qq)
    factorial = 1
    out = [falling[d]]
    for k in range(1, n + 1):
        falling = (falling * (y - (k - 1))).truncate(d + 1)
        factorial *= k
        out.append(falling[d] / factorial)
    return DensePoly(out, qq)


def log_power_series(d: int, n: int) -> DensePoly:
    """``log(1 + x)**d / d!`` truncated above degree ``n``, by repeated products."""
    if d < 0 or n < 0:
        raise PreconditionViolated("d and n must be non-negative")
    qq = RationalField()
    log = DensePoly(
        [0] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 1)], qq
    )
    result = DensePoly.constant(1, qq)
    factorial = 1
    for i in range(1, d + 1):
        result = (result * log).truncate(n + 1)
        factorial *= i
    return result * Fraction(1, factorial)

