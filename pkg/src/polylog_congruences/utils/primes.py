"""Prime range parsing for the command line"""

import re

import click
import sympy

from polylog_congruences.errors import PreconditionViolated
from polylog_congruences.settings import settings

_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_primes(spec: str, max_prime: int | None = None) -> list[int]:
    """Odd primes in ``LO..HI`` (inclusive), or the single prime ``P``."""
    max_prime = settings.max_prime if max_prime is None else max_prime
    match = _RANGE.match(spec)
    if not match:
        raise PreconditionViolated(f"Invalid prime range '{spec}'. Expected LO..HI or a prime")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) else lo
    if match.group(2) is None and not sympy.isprime(lo):
        raise PreconditionViolated(f"{lo} is not prime")
    if lo > hi:
        raise PreconditionViolated(f"Empty prime range '{spec}'")
    if hi > max_prime:
        raise PreconditionViolated(f"Upper bound {hi} exceeds the configured maximum {max_prime}")
    return [p for p in sympy.primerange(max(lo, 3), hi + 1)]


class PrimeRange(click.ParamType):
    name = "primes"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return parse_primes(value)
        except PreconditionViolated as e:
            self.fail(str(e), param, ctx)


class OddPrime(click.ParamType):
    name = "prime"

    def convert(self, value, param, ctx):
        try:
            p = int(value)
        except ValueError:
            self.fail(f"{value!r} is not an integer", param, ctx)
        if p < 3 or not sympy.isprime(p):
            self.fail(f"{p} is not an odd prime", param, ctx)
        return p
