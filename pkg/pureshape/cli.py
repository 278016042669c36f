# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Command-line front end for pureshape. Every subcommand prints one line of JSON on standard output, an envelope with
the command name, the echoed parameters, the result, and plain-language notes on the formulas used; `--format text`
prints a human-readable rendering instead. Logs and error envelopes go to standard error.

Exit codes: 0 success or passed verification, 2 precondition violated, 3 verification conflict, 4 unsupported
branch, 5 resource or search budget exhausted.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction

import click
import numpy as np

from pureshape.count import (
    _render_symbolic,
    count_report,
    density_shape_classes,
    rp_distribution_exact,
    symbolic_density,
    wieferich_split,
)
from pureshape.disc import disc_jump, disc_report
from pureshape.exceptions import DomainError, NotYetSupportedError, SearchExhaustedError, SizeBudgetError
from pureshape.helpers import SIEVE_MEMORY_ENV_VAR, _round_real, configure_logger
from pureshape.newton import is_p_regular_order1, newton_polygon
from pureshape.shape import basis_description, degree_primes, global_shape, wieferich_verdict
from pureshape.table import build_table, find_sharpness_witness, verify_minimality, verify_period

__all__ = ['main']

EXIT_OK, EXIT_DOMAIN, EXIT_CONFLICT, EXIT_UNSUPPORTED, EXIT_BUDGET = 0, 2, 3, 4, 5

_EXIT_CODES = (
    (DomainError, EXIT_DOMAIN),
    (NotYetSupportedError, EXIT_UNSUPPORTED),
    (SizeBudgetError, EXIT_BUDGET),
    (SearchExhaustedError, EXIT_BUDGET),
)


def _normalize(obj):
    """Make a result JSON-safe: reals rounded to 15 significant digits, tuples as lists, fractions as strings."""
    if isinstance(obj, dict):
        return {str(k): _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round_real(float(obj))
    return obj


def _run(ctx: click.Context, params: dict, compute, provenance: list[str]):
    """
    Run one subcommand body and print its envelope.

    `compute` returns (result, text, exit_code); exceptions are mapped onto exit codes and reported on stderr.
    """
    command = ctx.info_name
    try:
        result, text, code = compute()
    except tuple(exc for exc, _ in _EXIT_CODES) as e:
        code = next(c for exc, c in _EXIT_CODES if isinstance(e, exc))
        error = {'command': command, 'params': params, 'error': {'type': type(e).__name__, 'message': str(e)}}
        click.echo(json.dumps(_normalize(error)), err=True)
        ctx.exit(code)
        return
    if (ctx.find_object(dict) or {}).get('format', 'json') == 'text':
        click.echo(text)
    else:
        envelope = {'command': command, 'params': params, 'result': result, 'provenance': provenance}
        click.echo(json.dumps(_normalize(envelope)))
    ctx.exit(code)


FORMATS = click.Choice(['json', 'text'])


def _override_format(ctx: click.Context, param: click.Parameter, value: str | None):
    if value is not None:
        ctx.ensure_object(dict)['format'] = value
    return value


def format_option(func):
    """Subcommand-level `--format`; when omitted the group-level choice applies."""
    return click.option(
        '--format',
        'fmt',
        type=FORMATS,
        default=None,
        expose_value=False,
        callback=_override_format,
        help='Output format, overriding the one given before the subcommand.',
    )(func)


@click.group()
@click.option('--format', 'fmt', type=FORMATS, default='json', help='Output format.')
@click.option('--verbose', '-v', is_flag=True, default=False, help='Log debug messages to stderr.')
@click.option('--quiet', '-q', is_flag=True, default=False, help='Only log warnings and errors.')
@click.pass_context
def main(ctx: click.Context, fmt: str, verbose: bool, quiet: bool):
    """Integral basis shapes of pure number fields Q(a^(1/n))."""
    if verbose:
        configure_logger(logging_level=logging.DEBUG)
    elif quiet:
        configure_logger(logging_level=logging.WARNING)
    ctx.ensure_object(dict)
    ctx.obj['format'] = fmt


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--a', 'a', type=int, required=True, help='Radicand.')
@format_option
@click.pass_context
def shape(ctx: click.Context, n: int, a: int):
    """Local shapes and the integral basis description."""

    def compute():
        gs = global_shape(a, n)
        basis = basis_description(a, n)
        lines = [f'n={n}, a={a}']
        for ls in gs.locals:
            lines.append(f'  p={ls.p} e={ls.e_p} d={ls.d_p} k={"".join(map(str, ls.k))} ramified={ls.ramified}')
        lines += [f'  m={el.m}: ({el.numerator}) / {el.denominator}' for el in basis]
        result = {
            'shape': gs.to_dict(),
            'denominators': [el.denominator for el in basis],
            'basis': [el.to_dict() for el in basis],
        }
        return result, '\n'.join(lines), EXIT_OK

    provenance = [
        'd_p = min(r_p(a), e_p) clamped at 0, with r_p(a) = v_p(a^(p-1) - 1) - 1',
        'k_{p,m} = largest k <= d_p with m >= n - n/p^k',
        'D_m = C_m(a) * prod_p p^k_{p,m}, with C_m(a) = prod_j a_j^floor(j m / n)',
    ]
    _run(ctx, {'n': n, 'a': a}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--out', 'out', type=click.Path(dir_okay=False), default=None, help='Write one JSON line per class.')
@format_option
@click.pass_context
def table(ctx: click.Context, n: int, out: str):
    """The lookup table of shapes over residues modulo M(n)."""

    def compute():
        tbl = build_table(n)
        result = {'n': tbl.n, 'M': tbl.M, 'classes': len(tbl)}
        if out:
            tbl.export_jsonl(out)
            result['out'] = out
        else:
            result['records'] = tbl.to_records()
        return result, tbl.to_frame().to_string(index=False), EXIT_OK

    provenance = [
        'local tables modulo p^(e_p + 1) glued by the Chinese remainder theorem',
        'classes with p^(e_p + 1) dividing them hold only under Hypothesis H; classes with 0 < v_p <= e_p and p | v_p '
        'contain no radicand satisfying H',
    ]
    _run(ctx, {'n': n, 'out': out}, compute, provenance)


@main.command('verify-period')
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--bound', 'bound', type=int, required=True, help='Sweep all radicands with |a| <= bound.')
@format_option
@click.pass_context
def verify_period_cmd(ctx: click.Context, n: int, bound: int):
    """Check that shapes only depend on a modulo M(n)."""

    def compute():
        report = verify_period(n, bound)
        text = f'n={n} bound={bound}: {report.classes_checked} classes, {len(report.conflicts)} conflicts'
        return report.to_dict(), text, EXIT_OK if report.passed else EXIT_CONFLICT

    provenance = ['shapes of all n-th-power-free radicands satisfying H compared within classes modulo M(n)']
    _run(ctx, {'n': n, 'bound': bound}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--p', 'p', type=int, required=True, help='Prime dividing n.')
@format_option
@click.pass_context
def sharpness(ctx: click.Context, n: int, p: int):
    """A pair congruent modulo p^e_p but not p^(e_p + 1) with different local shapes."""

    def compute():
        w = find_sharpness_witness(n, p)
        text = f'n={n} p={p}: a={w.a} (d={w.d}) and a\'={w.a_prime} (d={w.d_prime}) agree mod {p}^{w.congruence_level}'
        return w.to_dict(), text, EXIT_OK

    provenance = ['a = 1 + p^e u and a\' = 1 + p^(e+1) u\' have r_p = e - 1 and r_p >= e by lifting the exponent']
    _run(ctx, {'n': n, 'p': p}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--bound', 'bound', type=int, required=True, help='Largest radicand used in refuting pairs.')
@format_option
@click.pass_context
def minimality(ctx: click.Context, n: int, bound: int):
    """Refute every candidate period M(n)/p."""

    def compute():
        report = verify_minimality(n, bound)
        lines = [f'n={n} M={report.M}']
        for p, (N, a, b, diffs) in sorted(report.refutations.items()):
            lines.append(f'  period {N} refuted by ({a}, {b}) at {diffs}')
        lines += [f'  period {report.M // p} NOT refuted' for p in report.unrefuted]
        return report.to_dict(), '\n'.join(lines), EXIT_OK if report.passed else EXIT_CONFLICT

    provenance = ['sharpness witnesses lifted to 1 modulo the other prime powers of M(n)']
    _run(ctx, {'n': n, 'bound': bound}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='The power n.')
@click.option('--q', 'q', type=int, default=1, show_default=True, help='Modulus of the progression.')
@click.option('--r', 'r', type=int, default=0, show_default=True, help='Residue of the progression.')
@click.option('--bound', 'bound', type=int, required=True, help='Count radicands with |a| <= bound.')
@click.option('--memory-mb', type=int, default=None, envvar=SIEVE_MEMORY_ENV_VAR, help='Sieve memory budget.')
@click.option('--workers', type=int, default=1, show_default=True, help='Processes for the sieve segments.')
@format_option
@click.pass_context
def count(ctx: click.Context, n: int, q: int, r: int, bound: int, memory_mb: int, workers: int):
    """Exact count of n-th-power-free radicands in a progression against the main term."""

    def compute():
        rep = count_report(bound, q, r, n, memory_mb=memory_mb, workers=workers)
        text = (
            f'n={n} a={r} mod {q} |a|<={bound}: exact {rep.exact}, main term {rep.main_term:.6f}, '
            f'relative error {rep.relative_error:.3e} ({rep.admissibility.verdict})'
        )
        return rep.to_dict(), text, EXIT_OK

    provenance = [
        'exact count by a segmented sieve striking multiples of p^n, both signs, a = 0 excluded',
        'main term (2X/q) (1/zeta(n)) prod_{p|q} (1 - p^-n)^-1 prod_{p^alpha||q} '
        '(1 - [v_p(r) >= min(alpha, n)] p^(min(alpha, n) - n))',
    ]
    _run(ctx, {'n': n, 'q': q, 'r': r, 'bound': bound}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--classes', 'classes', type=str, required=True, help='Comma separated residues modulo M(n).')
@format_option
@click.pass_context
def density(ctx: click.Context, n: int, classes: str):
    """Density of the radicands lying in a set of classes modulo M(n)."""

    def compute():
        try:
            residues = sorted({int(c) for c in classes.split(',') if c.strip()})
        except ValueError as e:
            raise DomainError(f'Classes must be comma separated integers, got {classes!r}.') from e
        value = density_shape_classes(n, residues)
        symbolic = _render_symbolic(symbolic_density(n, len(residues)))
        result = {'classes': residues, 'symbolic': symbolic, 'density': value}
        return result, f'n={n} classes={residues}: {symbolic} = {value:.15g}', EXIT_OK

    provenance = ['density (#R / M(n)) (1/zeta(n)) prod_{p|n} (1 - p^-n)^-1']
    _run(ctx, {'n': n, 'classes': classes}, compute, provenance)


@main.command('rp-dist')
@click.option('--p', 'p', type=int, required=True, help='A prime.')
@click.option('--e', 'e', type=int, default=1, show_default=True, help='Units are enumerated modulo p^(e+1).')
@format_option
@click.pass_context
def rp_dist(ctx: click.Context, p: int, e: int):
    """Distribution of r_p over the units modulo p^(e+1)."""

    def compute():
        dist = rp_distribution_exact(p, e)
        split = wieferich_split(p, e)
        result = dist.to_dict() | {'wieferich_split': split.to_dict()}
        return result, dist.to_frame().to_string(index=False), EXIT_OK

    provenance = ['#{u : v_p(u^(p-1) - 1) >= k} = (p-1) p^(e-k+1) for odd p, so P(r_p = j) = (p-1)/p^(j+1)']
    _run(ctx, {'p': p, 'e': e}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--a', 'a', type=int, required=True, help='Radicand.')
@click.option('--p', 'p', type=int, required=True, help='A prime.')
@format_option
@click.pass_context
def newton(ctx: click.Context, n: int, a: int, p: int):
    """Order-1 Newton polygon of x^n - a at p."""

    def compute():
        poly = newton_polygon(a, n, p)
        verdict = is_p_regular_order1(a, n, p)
        lines = [f'x^{n} - {a} at p={p}, {poly.expansion.branch} branch']
        for side, res in zip(poly.sides, poly.residuals):
            lines.append(f'  side {side.start} -> {side.end}, slope {side.slope}, residual {list(res)}')
        lines.append(f'  regular: {verdict.regular}')
        return poly.to_dict() | {'regularity': verdict.to_dict()}, '\n'.join(lines), EXIT_OK

    provenance = ['lower convex hull of (i, v_p(a_i)) for x^n - a expanded in powers of x - u or of x']
    _run(ctx, {'n': n, 'a': a, 'p': p}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--a', 'a', type=int, required=True, help='Radicand.')
@click.option('--p', 'p', type=int, required=True, help='A prime dividing n.')
@format_option
@click.pass_context
def monogenic(ctx: click.Context, n: int, a: int, p: int):
    """Whether Z[a^(1/n)] is p-maximal at order 1, with the Wieferich congruence when p || n."""

    def compute():
        e = dict(degree_primes(n)).get(p, 0)
        if e == 0:
            raise DomainError(f'p={p} is not a prime dividing n={n}.')
        wieferich = None
        if e == 1 and a % p:
            wieferich = {'congruence_holds': not wieferich_verdict(a, p), 'regular': wieferich_verdict(a, p)}
        try:
            order1 = is_p_regular_order1(a, n, p).to_dict()
        except NotYetSupportedError:
            if wieferich is None:
                raise
            order1 = None
        regular = order1['regular'] if order1 is not None else wieferich['regular']
        result = {'e': e, 'regular': regular, 'wieferich': wieferich, 'order1': order1}
        text = f'x^{n} - {a} at p={p}: {"regular" if regular else "not regular"}'
        if wieferich is not None:
            text += f' (a^{p - 1} = 1 mod {p}^2: {wieferich["congruence_holds"]})'
        return result, text, EXIT_OK

    provenance = ['for p || n and p not dividing a, regular exactly when a^(p-1) is not 1 mod p^2']
    _run(ctx, {'n': n, 'a': a, 'p': p}, compute, provenance)


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Degree of the pure field.')
@click.option('--a', 'a', type=int, required=True, help='Radicand.')
@click.option('--p', 'p', type=int, required=True, help='A prime dividing n.')
@format_option
@click.pass_context
def disc(ctx: click.Context, n: int, a: int, p: int):
    """The p-adic valuation of the field discriminant."""

    def compute():
        rep = disc_report(a, n, p)
        result = rep.to_dict()
        result['next_jump'] = disc_jump(n, p, rep.t) if 0 <= rep.t < rep.e else None
        return result, f'v_{p}(d_K) = {rep.valuation} for n={n}, a={a} (t={rep.t})', EXIT_OK

    provenance = ['v_p(d_K) = n e - 2 n_p sum_{j=1..t} p^(e-j) with t = min(r_p(a), e), n e when t <= 0']
    _run(ctx, {'n': n, 'a': a, 'p': p}, compute, provenance)


if __name__ == '__main__':
    main()
