# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Construction of the finite lookup table of shapes over residues modulo M(n), and empirical checks of the three
properties that make it correct: determinacy modulo M(n), local sharpness of every p^(e_p + 1), and minimality of M(n).
"""

from __future__ import annotations

from itertools import product

from pureshape.exceptions import DomainError, InternalConsistencyError, SearchExhaustedError, UserConfigError
from pureshape.helpers import MAX_TABLE_DEGREE, SEARCH_BUDGET, TABLE_SPOT_CHECKS, _sieve_memory_budget, logger
from pureshape.math.arith import crt_pair, modulus_M, power_free_segment, vp
from pureshape.models.reports import MinimalityReport, PeriodReport, SharpnessWitness
from pureshape.models.shapes import GlobalShape
from pureshape.models.tables import EntryStatus, ShapeTable, TableEntry
from pureshape.shape import _global_shape_unchecked, _local_shape_unchecked, degree_primes, hypothesis_H

__all__ = ['build_table', 'verify_period', 'find_sharpness_witness', 'verify_minimality']


def _class_valuation(residue: int, p: int, e_p: int) -> int:
    """v_p of a class modulo p^(e_p + 1), capped at e_p + 1 for the zero class."""
    return e_p + 1 if residue % p ** (e_p + 1) == 0 else vp(residue, p)


def _local_entry(residue: int, n: int, p: int, e_p: int) -> TableEntry:
    q = p ** (e_p + 1)
    v = _class_valuation(residue, p, e_p)
    if 0 < v <= e_p and v % p == 0:
        return TableEntry(EntryStatus.EXCLUDED, None, f'v_{p} = {v} is a positive multiple of {p}, which divides n')
    if v == e_p + 1:
        # Smallest multiple of p^(e_p + 1) with an admissible valuation; the ramified shape does not depend on which
        rep = next(t * q for t in range(1, p + 1) if vp(t * q, p) % p)
        reason = f'{p}^{e_p + 1} divides the class, so v_{p}(a) is only fixed by Hypothesis H'
        return TableEntry(EntryStatus.H_CONDITIONAL, _local_shape_unchecked(rep, n, p, e_p), reason)
    return TableEntry(EntryStatus.SHAPE, _local_shape_unchecked(residue, n, p, e_p))


def _local_table(n: int, p: int, e_p: int) -> dict[int, TableEntry]:
    return {c: _local_entry(c, n, p, e_p) for c in range(p ** (e_p + 1))}


def _glue(n: int, prime_entries: list[tuple[int, TableEntry]]) -> TableEntry:
    """Combine one local entry per prime into the global entry of their CRT class."""
    for p, entry in prime_entries:
        if entry.status is EntryStatus.EXCLUDED:
            return TableEntry(EntryStatus.EXCLUDED, None, f'at p={p}: {entry.reason}')
    shape = GlobalShape(n, tuple(entry.shape for _, entry in prime_entries))
    conditional = [f'at p={p}: {e.reason}' for p, e in prime_entries if e.status is EntryStatus.H_CONDITIONAL]
    if conditional:
        return TableEntry(EntryStatus.H_CONDITIONAL, shape, '; '.join(conditional))
    return TableEntry(EntryStatus.SHAPE, shape)


def _members(residue: int, modulus: int, n: int, count: int, max_tries: int):
    """The first `count` positive members of residue mod modulus satisfying Hypothesis H."""
    found = []
    a = residue if residue > 0 else modulus
    for _ in range(max_tries):
        if hypothesis_H(a, n):
            found.append(a)
            if len(found) == count:
                break
        a += modulus
    return found


def build_table(n: int, verify_samples: int = TABLE_SPOT_CHECKS, max_degree: int = MAX_TABLE_DEGREE) -> ShapeTable:
    """
    Build the lookup table T(n) of global shapes over all residues modulo M(n).

    Local tables modulo p^(e_p + 1) are computed prime by prime and glued over the Cartesian product by CRT. Each
    non-excluded global class is then spot-checked against the directly computed shapes of its smallest positive
    H-satisfying members.

    Parameters
    ----------
    n: int
        The degree
    verify_samples: int, optional
        How many members per class to recompute directly (default 3), 0 disables the spot checks
    max_degree: int, optional
        The largest degree accepted (default 60)

    Returns
    -------
    ShapeTable
        The table with its M(n) entries and the per-prime local tables
    """
    if not 3 <= n <= max_degree:
        raise UserConfigError(f'Tables are built for 3 <= n <= {max_degree}, got n={n}.')
    M = modulus_M(n)
    primes = degree_primes(n)
    logger.info(f'Building the shape table for n={n} over {M} classes.')
    local_tables = {p: _local_table(n, p, e) for p, e in primes}

    entries = {}
    moduli = [p ** (e + 1) for p, e in primes]
    for combo in product(*(sorted(local_tables[p].items()) for p, _ in primes)):
        residue, _ = crt_pair([c for c, _ in combo], moduli)
        entries[residue] = _glue(n, [(p, entry) for (p, _), (_, entry) in zip(primes, combo)])
    if len(entries) != M:
        raise InternalConsistencyError(f'CRT gluing produced {len(entries)} classes for n={n}, expected M={M}.')

    if verify_samples > 0:
        for residue, entry in entries.items():
            if entry.status is EntryStatus.EXCLUDED:
                continue
            members = _members(residue, M, n, verify_samples, max_tries=64 * verify_samples)
            for a in members:
                direct = _global_shape_unchecked(a, n)
                if direct != entry.shape:
                    raise InternalConsistencyError(
                        f'Table entry {residue} mod {M} disagrees with the shape of a={a}: '
                        f'{entry.shape.differences(direct)}.'
                    )
            logger.debug(f'Class {residue} mod {M} agrees with members {members}.')
    logger.info(f'Shape table for n={n} complete.')
    return ShapeTable(n, M, entries, local_tables)


def _satisfies_local_H(a: int, primes: tuple[tuple[int, int], ...]) -> bool:
    for p, _ in primes:
        if a % p == 0 and vp(a, p) % p == 0:
            return False
    return True


def verify_period(n: int, bound: int, table: ShapeTable = None, memory_mb: int = None) -> PeriodReport:
    """
    Check that all H-satisfying radicands with |a| <= bound in a residue class modulo M(n) share one shape, and that
    it is the shape stored in the lookup table.

    Parameters
    ----------
    n: int
        The degree
    bound: int
        Radicands a with 1 <= |a| <= bound are examined; must be at least M(n)
    table: ShapeTable, optional
        A prebuilt table for n, built on demand otherwise
    memory_mb: int, optional
        Memory budget for the power-free sieve segments

    Returns
    -------
    PeriodReport
        Conflicts are reported rather than raised
    """
    M = modulus_M(n)
    if bound < M:
        raise DomainError(f'The period sweep needs bound >= M({n}) = {M}, got {bound}.')
    table = table if table is not None else build_table(n)
    primes = degree_primes(n)
    report = PeriodReport(n, bound)
    seen: dict[int, tuple[int, GlobalShape]] = {}
    segment = min(bound, _sieve_memory_budget(memory_mb))
    logger.info(f'Sweeping |a| <= {bound} for n={n} in segments of {segment}.')

    for lo in range(1, bound + 1, segment):
        hi = min(lo + segment, bound + 1)
        for offset in power_free_segment(lo, hi, n).nonzero()[0]:
            b = lo + int(offset)
            if not _satisfies_local_H(b, primes):
                continue
            for a in (b, -b):
                shape = _global_shape_unchecked(a, n)
                report.members_checked += 1
                residue = a % M
                if residue not in seen:
                    seen[residue] = (a, shape)
                    entry = table.lookup(a)
                    if entry.status is EntryStatus.EXCLUDED:
                        report.conflicts.append((a, residue, None, 'status'))
                    elif entry.shape != shape:
                        report.conflicts.extend((a, residue, p, f) for p, f in entry.shape.differences(shape))
                    continue
                ref_a, ref_shape = seen[residue]
                if shape != ref_shape:
                    report.conflicts.extend((a, ref_a, p, f) for p, f in ref_shape.differences(shape))

    report.classes_checked = len(seen)
    if report.passed:
        logger.info(f'No conflicts across {report.classes_checked} classes mod {M} for n={n}.')
    else:
        logger.warning(f'{len(report.conflicts)} period conflicts for n={n}, first: {report.conflicts[:5]}')
    return report


def _first_H_radicand(n: int, p: int, level: int, search_budget: int, skip: int = 0) -> int:
    found = 0
    for u in range(1, search_budget + 1):
        if u % p == 0:
            continue
        a = 1 + p**level * u
        if hypothesis_H(a, n):
            if found == skip:
                return a
            found += 1
    raise SearchExhaustedError(f'No radicand 1 + {p}^{level} u satisfying H for n={n} within u <= {search_budget}.')


def find_sharpness_witness(n: int, p: int, search_budget: int = SEARCH_BUDGET) -> SharpnessWitness:
    """
    Find a = 1 + p^e u and a' = 1 + p^(e+1) u', both satisfying Hypothesis H, whose local p-shapes differ.

    The pair agrees modulo p^e but not modulo p^(e+1), so p^e alone does not determine the local shape. The smallest
    admissible u is taken for a, and u' runs upwards until the shapes differ.
    """
    e_p = dict(degree_primes(n)).get(p, 0)
    if e_p == 0:
        raise DomainError(f'p={p} does not divide n={n}.')
    a = _first_H_radicand(n, p, e_p, search_budget)
    ls = _local_shape_unchecked(a, n, p, e_p)
    for skip in range(search_budget):
        try:
            a_prime = _first_H_radicand(n, p, e_p + 1, search_budget, skip)
        except SearchExhaustedError:
            break
        ls_prime = _local_shape_unchecked(a_prime, n, p, e_p)
        if ls_prime != ls:
            first_m = next((m for m, (k, kk) in enumerate(zip(ls.k, ls_prime.k), start=1) if k != kk), None)
            logger.debug(f'Sharpness at n={n}, p={p}: a={a} (d={ls.d_p}), a\'={a_prime} (d={ls_prime.d_p}).')
            return SharpnessWitness(n, p, e_p, a, a_prime, ls.d_p, ls_prime.d_p, first_m, ls.k, ls_prime.k)
    msg = f'No sharpness witness for n={n}, p={p} within the search budget {search_budget}.'
    logger.error(msg)
    raise SearchExhaustedError(msg)


def _lift_to_H(residue: int, modulus: int, n: int, bound: int) -> int | None:
    a = residue if residue > 0 else modulus
    while a <= bound:
        if hypothesis_H(a, n):
            return a
        a += modulus
    return None


def verify_minimality(n: int, bound: int) -> MinimalityReport:
    """
    Refute every candidate period M(n)/p by a pair of H-satisfying radicands congruent modulo M(n)/p whose shapes
    differ. Pairs come from lifting the local sharpness witness at p, taken as 1 modulo the other prime powers.
    """
    M = modulus_M(n)
    if bound < M:
        raise DomainError(f'The minimality check needs bound >= M({n}) = {M}, got {bound}.')
    report = MinimalityReport(n, M, bound)
    for p, e_p in degree_primes(n):
        N = M // p
        local_mod = p ** (e_p + 1)
        witness = find_sharpness_witness(n, p)
        lifted = []
        for a in (witness.a, witness.a_prime):
            residue, _ = crt_pair([a % local_mod, 1], [local_mod, M // local_mod])
            lifted.append(_lift_to_H(residue, M, n, bound))
        if None in lifted:
            logger.warning(f'No H-satisfying lifts of the witness at p={p} below {bound} for n={n}.')
            report.unrefuted.append(p)
            continue
        a, a_prime = lifted
        if (a - a_prime) % N:
            raise InternalConsistencyError(f'Lifted pair ({a}, {a_prime}) is not congruent modulo {N}.')
        diffs = _global_shape_unchecked(a, n).differences(_global_shape_unchecked(a_prime, n))
        if not diffs:
            report.unrefuted.append(p)
            continue
        report.refutations[p] = (N, a, a_prime, diffs)
        logger.debug(f'Candidate period {N} for n={n} refuted by ({a}, {a_prime}) at {diffs}.')
    logger.info(f'Minimality for n={n}: {len(report.refutations)} of {len(degree_primes(n))} sub-periods refuted.')
    return report
