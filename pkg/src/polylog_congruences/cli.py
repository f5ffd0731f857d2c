"""
Command-line interface for polylog-congruences.
"""

import logging
import sys
from collections import Counter
from fractions import Fraction

import click
from pydantic import TypeAdapter

from polylog_congruences.__version__ import __version__
from polylog_congruences.arith import PadicApprox, PadicContext, fermat_quotient, reduce
from polylog_congruences.congruences import list_cases
from polylog_congruences.congruences.numeric import central_binomial_sum
from polylog_congruences.errors import PolylogError, UnknownCase
from polylog_congruences.identities import get_identity, list_identities, verify_identity
from polylog_congruences.polylog import finite_polylog
from polylog_congruences.schemas.case import CaseDescriptor, IdentityOutcome
from polylog_congruences.services.sweep import verify_sweep
from polylog_congruences.settings import LOG_LEVELS, settings
from polylog_congruences.special import bernoulli_mod, euler_mod, harmonic, lucas_quotient
from polylog_congruences.utils.allowlists import COMPUTE_TARGETS, FAMILIES, OUTPUT_FORMATS
from polylog_congruences.utils.primes import OddPrime, PrimeRange

FORMAT_OPTION = click.option(
    "--format",
    "fmt",
    type=click.Choice(sorted(OUTPUT_FORMATS)),
    default="text",
    show_default=True,
    help="Output format",
)


@click.group()
@click.version_option(version=__version__, prog_name="polylog-congruences")
@click.option(
    "--log-level",
    type=click.Choice(sorted(LOG_LEVELS), case_sensitive=False),
    default=None,
    help="Logging level (default: POLYLOG_LOG_LEVEL or WARNING)",
)
def main(log_level):
    """Verify finite polylogarithm and central binomial congruences modulo prime powers."""
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


@main.command()
@click.option("--case", "case_ids", multiple=True, help="Case id (repeatable)")
@click.option(
    "--family",
    "families",
    multiple=True,
    type=click.Choice(sorted(FAMILIES)),
    help="Case family (repeatable)",
)
@click.option(
    "--primes",
    type=PrimeRange(),
    default=settings.default_primes,
    show_default=True,
    help="Prime range LO..HI or a single prime",
)
@FORMAT_OPTION
@click.option("--jobs", type=click.IntRange(min=1), default=settings.jobs, show_default=True)
@click.option("--no-timings", is_flag=True, help="Zero per-case timings and omit the timestamp")
def verify(case_ids, families, primes, fmt, jobs, no_timings):
    """Verify congruence cases over a range of primes."""
    ids = list(case_ids)
    ids += [c.id for f in families for c in list_cases(f) if c.id not in ids]
    if not ids:
        ids = [c.id for c in list_cases()]
    try:
        report = verify_sweep(ids, primes, jobs=jobs, timings=not no_timings)
    except UnknownCase as e:
        raise click.BadParameter(str(e), param_hint="--case") from None

    if fmt == "json":
        click.echo(report.model_dump_json(by_alias=True, indent=2))
    else:
        for r in report.cases:
            line = f"{r.status.upper():<7} {r.id:<16} p={r.p:<4} mod p^{r.modulus_exponent}"
            if r.witness is not None:
                w = r.witness
                line += f"  [{w.label}] index {w.index}: {w.lhs} != {w.rhs} mod p^{w.modulus_exponent}"
            if r.error:
                line += f"  error: {r.error}"
            click.echo(line)
        s = report.summary
        click.echo(f"\n{s.passed} passed, {s.fail} failed, {s.skipped} skipped")
    if not report.ok:
        sys.exit(1)


@main.command("list")
@click.option("--family", type=click.Choice(sorted(FAMILIES)), default=None)
@FORMAT_OPTION
def list_command(family, fmt):
    """List registered congruence cases."""
    descriptors = [c.descriptor() for c in list_cases(family)]
    if fmt == "json":
        adapter = TypeAdapter(list[CaseDescriptor])
        click.echo(adapter.dump_json(descriptors, indent=2).decode())
        return
    for d in descriptors:
        click.echo(
            f"{d.id:<16} {d.family:<5} mod p^{d.modulus_exponent:<2} {d.condition:<12} {d.anchor}"
        )


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"{text!r} is not a rational number") from None


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise click.BadParameter(f"{text!r} is not an integer") from None


def _prime(text: str) -> int:
    return OddPrime().convert(text, None, None)


def _format_padic(value: PadicApprox, j: int) -> str:
    p = value.ctx.p
    if value.v is not None and value.v < 0 and not value.is_zero:
        return f"{reduce(value.shift(-value.v), j)}/{p}^{-value.v} (valuation {value.v})"
    residue = reduce(value, j)
    if value.is_zero or value.v == 0:
        return str(residue)
    return f"{residue} (valuation {value.v})"


# target -> (argument names, evaluator)
_COMPUTE = {
    "polylog": ("D X P", lambda a, ctx: finite_polylog(_integer(a[0]), _rational(a[1]), ctx)),
    "bernoulli": ("M P", lambda a, ctx: bernoulli_mod(_integer(a[0]), ctx.p)),
    "euler": ("N P", lambda a, ctx: euler_mod(_integer(a[0]), ctx.p)),
    "fermat-quotient": ("A P", lambda a, ctx: fermat_quotient(_integer(a[0]), ctx)),
    "lucas-quotient": ("P", lambda a, ctx: lucas_quotient(ctx)),
    "harmonic": ("N D P", lambda a, ctx: harmonic(_integer(a[0]), _integer(a[1]), ctx)),
    "central-binomial-sum": (
        "D T P",
        lambda a, ctx: central_binomial_sum(ctx, _integer(a[0]), _rational(a[1])),
    ),
}


@main.command()
@click.argument("what", type=click.Choice(sorted(COMPUTE_TARGETS)))
@click.argument("args", nargs=-1, required=True)
@click.option("--mod-exp", type=click.IntRange(min=1), default=1, show_default=True)
def compute(what, args, mod_exp):
    """Compute a constant modulo p**J; the prime is always the last argument.

    \b
      polylog D X P             £_D(X)
      bernoulli M P             B_M (mod p only)
      euler N P                 E_N (mod p only)
      fermat-quotient A P       q_p(A)
      lucas-quotient P          (L_p - 1)/p
      harmonic N D P            H_N(D)
      central-binomial-sum D T P  sum C(2k,k) T^k / k^D
    """
    names, evaluate = _COMPUTE[what]
    expected = len(names.split())
    if len(args) != expected:
        raise click.UsageError(f"compute {what} expects {names}, got {len(args)} argument(s)")
    p = _prime(args[-1])
    ctx = PadicContext(p, k=mod_exp, g=settings.guard_digits)
    try:
        value = evaluate(args[:-1], ctx)
        text = _format_padic(value, mod_exp) if isinstance(value, PadicApprox) else str(value)
    except PolylogError as e:
        raise click.UsageError(str(e)) from None
    click.echo(text)


@main.command()
@click.option("--case", "case_ids", multiple=True, help="Identity id (repeatable)")
@click.option("--n-max", type=click.IntRange(min=0), default=settings.identity_max_n, show_default=True)
@click.option("--s-max", type=click.IntRange(min=1), default=settings.identity_max_s, show_default=True)
@FORMAT_OPTION
def identities(case_ids, n_max, s_max, fmt):
    """Check the exact polynomial identities for every n up to --n-max."""
    try:
        cases = [get_identity(i) for i in case_ids] or list_identities()
    except UnknownCase as e:
        raise click.BadParameter(str(e), param_hint="--case") from None

    outcomes = []
    for case in cases:
        weights = range(1, s_max + 1) if case.uses_s else [None]
        for s in weights:
            for n in range(max(case.min_n, 0), n_max + 1):
                verdict = verify_identity(case.id, n, s)
                outcomes.append(
                    IdentityOutcome(
                        id=verdict.id,
                        n=n,
                        s=s,
                        status="pass" if verdict.passed else "fail",
                        pairs_checked=verdict.checked,
                        residual=None if verdict.residual is None else repr(verdict.residual),
                    )
                )

    failed = [o for o in outcomes if o.status == "fail"]
    if fmt == "json":
        click.echo(TypeAdapter(list[IdentityOutcome]).dump_json(outcomes, indent=2).decode())
    else:
        for o in failed:
            click.echo(f"FAIL    {o.id:<10} n={o.n} s={o.s}  residual {o.residual}")
        click.echo(f"{len(outcomes) - len(failed)} passed, {len(failed)} failed")
    if failed:
        sys.exit(1)


@main.command()
def info():
    """Show information about the installation."""
    click.echo("polylog-congruences - Installation Info")
    click.echo("=" * 60)
    click.echo(f"Version: {__version__}")
    click.echo(f"Python: {sys.version.split()[0]}")

    click.echo("\nSettings:")
    for key, value in settings.model_dump().items():
        click.echo(f"  {key}: {value}")

    counts = Counter(c.family for c in list_cases())
    click.echo("\nRegistered cases:")
    for family in sorted(counts):
        click.echo(f"  {family}: {counts[family]}")
    click.echo(f"  identities: {len(list_identities())}")

    click.echo("=" * 60)


if __name__ == "__main__":
    main()
