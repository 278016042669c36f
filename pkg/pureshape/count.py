# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Counting n-th-power-free radicands: exact sieved counts in arithmetic progressions next to their asymptotic main
terms, the admissibility of progressions, densities of shape classes modulo M(n), and the distribution of r_p over
units.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from multiprocessing import Pool

import numpy as np
import pandas as pd
import sympy
from sympy import isprime

from pureshape.exceptions import DomainError, InternalConsistencyError, SizeBudgetError
from pureshape.helpers import ENUMERATION_BUDGET, MAX_SIEVE_BOUND, _sieve_memory_budget, logger
from pureshape.math.arith import factorize, modulus_M, power_free_segment, vp
from pureshape.models.reports import AdmissibilityVerdict, CountReport, RpDistribution, WieferichSplit
from pureshape.models.tables import EntryStatus
from pureshape.shape import degree_primes
from pureshape.table import build_table

__all__ = [
    'count_exact',
    'count_report',
    'zeta_value',
    'main_term',
    'local_count_factor',
    'admissibility',
    'is_n_full',
    'density_shape_classes',
    'symbolic_density',
    'shape_class_partition',
    'shape_class_densities',
    'convergence_table',
    'rp_distribution_exact',
    'wieferich_split',
]


def _validate_progression(q: int, r: int, n: int):
    if q < 1:
        raise DomainError(f'The modulus q must be positive, got {q}.')
    if not 0 <= r < q:
        raise DomainError(f'The residue r must lie in [0, {q}), got {r}.')
    if n < 2:
        raise DomainError(f'Power-freeness needs n >= 2, got n={n}.')


def _count_segment(lo: int, hi: int, n: int, q: int, residues: tuple[int, ...]) -> int:
    """Count n-th-power-free b in [lo, hi) over the given residues of b mod q, one count per listed residue."""
    mask = power_free_segment(lo, hi, n)
    return sum(int(mask[(res - lo) % q :: q].sum()) for res in residues)


def count_exact(X: int, q: int, r: int, n: int, memory_mb: int = None, workers: int = 1) -> int:
    """
    Count the n-th-power-free a with 1 <= |a| <= X and a = r mod q.

    Positive radicands a = b are read off the sieve at b = r mod q and negative radicands a = -b at b = -r mod q,
    since n-th-power-freeness ignores the sign.

    Parameters
    ----------
    X: int
        Bound on |a|
    q: int
        Modulus of the progression
    r: int
        Residue in [0, q)
    n: int
        The power, at least 2
    memory_mb: int, optional
        Memory budget for one sieve segment, read from PURESHAPE_SIEVE_MEMORY_MB or defaulting to 256 MB
    workers: int, optional
        Number of processes the segments are spread over (default 1)

    Returns
    -------
    int
        The exact count
    """
    _validate_progression(q, r, n)
    if X < 1:
        raise DomainError(f'The bound X must be at least 1, got {X}.')
    if X > MAX_SIEVE_BOUND:
        raise SizeBudgetError(f'Exact counts are limited to X <= {MAX_SIEVE_BOUND}, got {X}.')
    segment = min(X, _sieve_memory_budget(memory_mb))
    residues = (r, (-r) % q)
    tasks = [(lo, min(lo + segment, X + 1), n, q, residues) for lo in range(1, X + 1, segment)]
    logger.debug(f'Counting {n}-free a = {r} mod {q} up to {X} in {len(tasks)} segments.')
    if workers > 1 and len(tasks) > 1:
        with Pool(processes=workers) as pool:
            return sum(pool.starmap(_count_segment, tasks))
    return sum(_count_segment(*task) for task in tasks)


def zeta_value(n: int) -> sympy.Expr:
    """zeta(n) as an exact sympy value: a rational multiple of pi^n for even n, the symbol zeta(n) otherwise."""
    if n < 2:
        raise DomainError(f'zeta(n) diverges for n={n}.')
    return sympy.zeta(n)


def local_count_factor(p: int, alpha: int, v: int, n: int) -> Fraction:
    """
    The p-local correction 1 - [v >= min(alpha, n)] p^(min(alpha, n) - n) of the main term.

    It is 1 when the class does not force p^min(alpha, n) into a, p^(alpha - n) smaller otherwise, and vanishes exactly
    when the class forces p^n into a.
    """
    level = min(alpha, n)
    if v < level:
        return Fraction(1)
    return 1 - Fraction(p) ** (level - n)


def _class_valuations(r: int, q: int) -> list[tuple[int, int, int]]:
    """(p, v_p(r), alpha) for each p^alpha || q, with v_p(r) capped at alpha."""
    if q == 1:
        return []
    witnesses = []
    for p, alpha in factorize(q).factors:
        v = alpha if r % p**alpha == 0 else vp(r, p)
        witnesses.append((p, v, alpha))
    return witnesses


def admissibility(r: int, q: int, n: int) -> AdmissibilityVerdict:
    """
    Classify the progression r mod q: inadmissible when it forces some p^n to divide every member, strict when every
    p^alpha || q has v_p(r) < min(alpha, n), and weak otherwise.
    """
    _validate_progression(q, r, n)
    witnesses = tuple(_class_valuations(r, q))
    if any(alpha >= n and v >= n for _, v, alpha in witnesses):
        verdict = 'inadmissible'
    elif all(v < min(alpha, n) for _, v, alpha in witnesses):
        verdict = 'strict'
    else:
        verdict = 'weak'
    return AdmissibilityVerdict(verdict, witnesses)


def is_n_full(q: int, n: int) -> bool:
    if q < 1:
        raise DomainError(f'The modulus q must be positive, got {q}.')
    return q == 1 or all(alpha >= n for _, alpha in factorize(q).factors)


def main_term(X: int, q: int, r: int, n: int) -> float:
    """
    The asymptotic count (2X/q) (1/zeta(n)) prod_{p|q} (1 - p^-n)^-1 prod_{p^alpha||q} local_count_factor.

    Parameters
    ----------
    X: int
        Bound on |a|
    q: int
        Modulus of the progression
    r: int
        Residue in [0, q)
    n: int
        The power, at least 2

    Returns
    -------
    float
        The main term, 0 for inadmissible progressions
    """
    _validate_progression(q, r, n)
    rational = Fraction(2 * X, q)
    for p, v, alpha in _class_valuations(r, q):
        rational *= local_count_factor(p, alpha, v, n) / (1 - Fraction(p) ** -n)
    return float(sympy.Rational(rational.numerator, rational.denominator) / zeta_value(n))


def count_report(X: int, q: int, r: int, n: int, memory_mb: int = None, workers: int = 1) -> CountReport:
    exact = count_exact(X, q, r, n, memory_mb, workers)
    return CountReport(X, q, r, n, exact, main_term(X, q, r, n), admissibility(r, q, n))


def _density_offenders(n: int, residues) -> list[int]:
    M = modulus_M(n)
    offenders = []
    for r in residues:
        if not 0 <= r < M:
            offenders.append(r)
            continue
        for p, e in degree_primes(n):
            if r % p ** (e + 1) == 0 or vp(r, p) > 1:
                offenders.append(r)
                break
    return offenders


def symbolic_density(n: int, size: int) -> sympy.Expr:
    """(size / M(n)) (1/zeta(n)) prod_{p|n} (1 - p^-n)^-1 as an exact sympy expression."""
    M = modulus_M(n)
    euler = prod((1 - sympy.Rational(1, p**n)) ** -1 for p, _ in degree_primes(n))
    return sympy.Rational(size, M) * euler / zeta_value(n)


def density_shape_classes(n: int, residues) -> float:
    """
    Natural density among all integers of the radicands lying in the given classes modulo M(n).

    Parameters
    ----------
    n: int
        The degree
    residues: iterable of int
        Classes in [0, M(n)), each with v_p(r) <= 1 for every p | n

    Returns
    -------
    float
        The density (#R / M(n)) (1/zeta(n)) prod_{p|n} (1 - p^-n)^-1
    """
    residues = set(residues)
    offenders = _density_offenders(n, residues)
    if offenders:
        raise DomainError(f'Classes {sorted(offenders)} are not admissible for n={n}.', sorted(offenders))
    return float(symbolic_density(n, len(residues)))


def shape_class_partition(n: int, granularity: str = 'denominators') -> dict:
    """
    Partition the admissible classes modulo M(n) by shape.

    Parameters
    ----------
    n: int
        The degree
    granularity: str, optional
        'denominators' keys classes by their denominator profile (the k-sequences per prime), 'shape' by the full
        global shape including betas and the ramified flag (default 'denominators')

    Returns
    -------
    dict
        Maps each key to the set of residues sharing it
    """
    if granularity not in ('denominators', 'shape'):
        raise DomainError(f"Granularity must be 'denominators' or 'shape', got {granularity!r}.")
    table = build_table(n, verify_samples=0)
    admissible = set(range(table.M)) - set(_density_offenders(n, range(table.M)))
    partition: dict = {}
    for residue in sorted(admissible):
        entry = table.entries[residue]
        if entry.status is not EntryStatus.SHAPE:
            raise InternalConsistencyError(f'Admissible class {residue} mod {table.M} has table status {entry.status}.')
        key = entry.shape.denominator_profile if granularity == 'denominators' else entry.shape
        partition.setdefault(key, set()).add(residue)
    return partition


def _render_symbolic(expr: sympy.Expr) -> str:
    return str(expr).replace('**', '^')


def shape_class_densities(n: int) -> pd.DataFrame:
    """One row per denominator profile: class count, its local factorization, and the symbolic and numeric density."""
    rows = []
    for profile, residues in shape_class_partition(n).items():
        local_sizes = [len({r % p ** (e + 1) for r in residues}) for p, e in degree_primes(n)]
        expr = symbolic_density(n, len(residues))
        rows.append(
            {
                'profile': '; '.join(f'{p}: {"".join(map(str, k))}' for p, k in profile),
                'classes': len(residues),
                'local_sizes': 'x'.join(map(str, local_sizes)),
                'product_set': prod(local_sizes) == len(residues),
                'symbolic': _render_symbolic(expr),
                'density': float(expr),
            }
        )
    return pd.DataFrame(rows).sort_values('classes', ignore_index=True)


def convergence_table(n: int, q: int, r: int, bounds, memory_mb: int = None) -> pd.DataFrame:
    """Exact counts next to main terms for a sequence of bounds X."""
    reports = [count_report(X, q, r, n, memory_mb) for X in bounds]
    return pd.DataFrame(
        {
            'X': [rep.X for rep in reports],
            'exact': [rep.exact for rep in reports],
            'main_term': [rep.main_term for rep in reports],
            'relative_error': [rep.relative_error for rep in reports],
        }
    )


def _vector_pow_mod(base: np.ndarray, exponent: int, modulus: int) -> np.ndarray:
    result = np.ones_like(base)
    while exponent:
        if exponent & 1:
            result = result * base % modulus
        base = base * base % modulus
        exponent >>= 1
    return result


def rp_distribution_exact(p: int, e: int, budget: int = ENUMERATION_BUDGET) -> RpDistribution:
    """
    Enumerate the units u mod p^(e+1) and count those with v_p(u^(p-1) - 1) >= k for k = 1..e+1.

    For odd p the counts must be (p-1) p^(e-k+1); a mismatch raises InternalConsistencyError. For p = 2 the counts are
    reported as they come.

    Parameters
    ----------
    p: int
        A prime
    e: int
        At least 1; units are taken modulo p^(e+1)
    budget: int, optional
        Largest modulus p^(e+1) enumerated (default 10^7)

    Returns
    -------
    RpDistribution
        Threshold counts, the closed-form counts for odd p, and the units whose valuation reaches the precision
    """
    if not isprime(p):
        raise DomainError(f'Expected a prime, got p={p}.')
    if e < 1:
        raise DomainError(f'e must be at least 1, got {e}.')
    modulus = p ** (e + 1)
    if modulus > budget:
        raise SizeBudgetError(f'Enumerating units mod {p}^{e + 1} = {modulus} exceeds the budget {budget}.')
    units = np.arange(1, modulus, dtype=np.int64)
    units = units[units % p != 0]
    diff = (_vector_pow_mod(units, p - 1, modulus) - 1) % modulus
    counts = tuple((k, int(np.count_nonzero(diff % p**k == 0))) for k in range(1, e + 2))
    capped = tuple(int(u) for u in units[diff == 0])

    expected = None
    if p != 2:
        expected = tuple((p - 1) * p ** (e - k + 1) for k in range(1, e + 2))
        if tuple(c for _, c in counts) != expected:
            raise InternalConsistencyError(f'Unit counts {counts} mod {modulus} contradict the law {expected}.')
    else:
        logger.info(f'r_2 distribution mod {modulus} is empirical; units {capped} reach the precision cap.')
    return RpDistribution(p, e, len(units), counts, expected, capped)


def wieferich_split(p: int, e: int = 1) -> WieferichSplit:
    """
    Proportions of units with r_p = 0 and with r_p >= 1, which are 1 - 1/p and 1/p for odd p.

    Returns
    -------
    WieferichSplit
        Unpacks as (r0, r_ge1); for p = 2 the values come from enumeration and are flagged empirical
    """
    dist = rp_distribution_exact(p, e)
    r0 = dist.probabilities[0]
    split = WieferichSplit(p, e, r0, 1 - r0, empirical=p == 2, capped=dist.capped)
    if p != 2 and r0 != 1 - Fraction(1, p):
        raise InternalConsistencyError(f'Proportion {r0} of r_{p} = 0 differs from 1 - 1/{p}.')
    return split
