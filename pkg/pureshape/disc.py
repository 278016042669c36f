# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Local discriminant valuations v_p(d_K) of pure fields at primes p dividing the degree, as a closed form in
t_p = min(r_p(a), e_p), together with the exact jump between consecutive values of t_p and radicand pairs realizing it.
"""

from __future__ import annotations

import pandas as pd

from pureshape.exceptions import DomainError, SearchExhaustedError
from pureshape.helpers import SEARCH_BUDGET, logger
from pureshape.models.reports import DiscLocalReport
from pureshape.shape import _local_shape_unchecked, _require_hypothesis_H, degree_primes, hypothesis_H

__all__ = ['disc_valuation', 'disc_jump', 'disc_report', 'disc_jump_witness', 'disc_profile']


def _split_degree(n: int, p: int) -> tuple[int, int]:
    e = dict(degree_primes(n)).get(p, 0)
    if e == 0:
        raise DomainError(f'p={p} is not a prime dividing n={n}.')
    return e, n // p**e


def disc_valuation(n: int, p: int, t: int) -> int:
    """
    The valuation v_p(d_K) for a pure field of degree n whose radicand has t_p = t.

    Parameters
    ----------
    n: int
        The degree
    p: int
        A prime dividing n
    t: int
        min(r_p(a), e_p), in [-1, e_p]; the ramified branch uses -1

    Returns
    -------
    int
        n e - 2 n_p (p^(e-1) + ... + p^(e-t)), which is n e for t <= 0
    """
    e, n_p = _split_degree(n, p)
    if not -1 <= t <= e:
        raise DomainError(f't must lie in [-1, {e}] for n={n}, p={p}; got {t}.')
    return n * e - 2 * n_p * sum(p ** (e - j) for j in range(1, t + 1))


def disc_jump(n: int, p: int, t: int) -> int:
    """The drop disc_valuation(n, p, t) - disc_valuation(n, p, t + 1) = 2 n_p p^(e - t - 1), for 0 <= t < e."""
    e, n_p = _split_degree(n, p)
    if not 0 <= t <= e - 1:
        raise DomainError(f'A jump needs t in [0, {e - 1}] for n={n}, p={p}; got {t}.')
    return 2 * n_p * p ** (e - t - 1)


def disc_report(a: int, n: int, p: int) -> DiscLocalReport:
    _require_hypothesis_H(a, n)
    e, n_p = _split_degree(n, p)
    ls = _local_shape_unchecked(a, n, p, e)
    t = -1 if ls.ramified else min(ls.r_p, e)
    return DiscLocalReport(p, e, n_p, t, disc_valuation(n, p, t))


def _first_radicand_at(n: int, p: int, level: int, t: int, search_budget: int) -> int:
    """Smallest a = 1 + p^level u with p not dividing u, satisfying H, with t_p(a) = t."""
    e, _ = _split_degree(n, p)
    for u in range(1, search_budget + 1):
        if u % p == 0:
            continue
        a = 1 + p**level * u
        if hypothesis_H(a, n) and disc_report(a, n, p).t == t:
            return a
    msg = f'No radicand 1 + {p}^{level} u with t_{p} = {t} (e={e}) found for n={n} within u <= {search_budget}.'
    logger.error(msg)
    raise SearchExhaustedError(msg)


def disc_jump_witness(n: int, p: int, t: int, search_budget: int = SEARCH_BUDGET) -> tuple[int, int]:
    """
    Radicands a = 1 + p^(t+1) u and a' = 1 + p^(t+2) u' with t_p(a) = t and t_p(a') = t + 1.

    Parameters
    ----------
    n: int
        The degree
    p: int
        A prime dividing n
    t: int
        The lower level, in [0, e_p - 1]
    search_budget: int, optional
        How many multipliers u to try before giving up (default SEARCH_BUDGET)

    Returns
    -------
    tuple of int
        (a, a'), both satisfying Hypothesis H, whose valuations differ by exactly disc_jump(n, p, t)
    """
    jump = disc_jump(n, p, t)
    a = _first_radicand_at(n, p, t + 1, t, search_budget)
    a_prime = _first_radicand_at(n, p, t + 2, t + 1, search_budget)
    logger.debug(f'Discriminant jump {jump} at n={n}, p={p}, t={t} realized by ({a}, {a_prime}).')
    return a, a_prime


def disc_profile(n: int, p: int) -> pd.DataFrame:
    """Tabulate v_p(d_K) and the jump to the next level for every t in [-1, e_p]."""
    e, n_p = _split_degree(n, p)
    rows = []
    for t in range(-1, e + 1):
        rows.append(
            {
                't': t,
                'valuation': disc_valuation(n, p, t),
                'jump': disc_jump(n, p, t) if 0 <= t < e else pd.NA,
            }
        )
    profile = pd.DataFrame(rows)
    profile['jump'] = profile['jump'].astype('Int64')
    return profile
