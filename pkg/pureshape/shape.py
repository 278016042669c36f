# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Shape invariants of pure number fields Q(theta), theta^n = a: Hypothesis H, r_p, d_p, the denominator exponents
k_{p,m}, the numerator factors C_m(a), and the assembly of local and global shapes and of the integral basis
description built from them.
"""

from __future__ import annotations

from functools import lru_cache
from math import prod

from sympy import isprime

from pureshape.cookbook.beta_fixtures import beta_fixture, fixture_covers
from pureshape.exceptions import DomainError, HypothesisError, InternalConsistencyError
from pureshape.helpers import RP_DEFAULT_PRECISION, RP_PRECISION_MARGIN, logger
from pureshape.math.arith import crt_pair, factorize, squarefree_decomposition, vp
from pureshape.models.shapes import BasisElement, GlobalShape, LocalShape, render_theta_poly

__all__ = [
    'degree_primes',
    'hypothesis_H',
    'r_p',
    'd_p',
    'k_pm',
    'k_pm_count',
    'k_sequence',
    'C_m',
    'wieferich_verdict',
    'local_shape',
    'global_shape',
    'basis_description',
]


@lru_cache(maxsize=256)
def degree_primes(n: int) -> tuple[tuple[int, int], ...]:
    """The (p, e_p) pairs with p^e_p || n."""
    if n < 2:
        raise DomainError(f'Degree must be at least 2, got n={n}.')
    return factorize(n).factors


def _hypothesis_violation(a: int, n: int) -> tuple[int, str] | None:
    if a == 0:
        raise DomainError('a = 0 does not define a pure field.')
    for q, e in factorize(a).factors:
        if e >= n:
            return q, f'{a} is not {n}-th-power-free: v_{q}({a}) = {e} >= {n}'
    for p, _ in degree_primes(n):
        v = vp(a, p)
        if v > 0 and v % p == 0:
            return p, f'v_{p}({a}) = {v} is a positive multiple of {p}, which divides n = {n}'
    return None


def hypothesis_H(a: int, n: int) -> bool:
    """True iff a is n-th-power-free and, at each p | n, v_p(a) is zero or not divisible by p."""
    if n < 3:
        raise DomainError(f'Pure fields of degree n >= 3 only, got n={n}.')
    return _hypothesis_violation(a, n) is None


def _require_hypothesis_H(a: int, n: int):
    if n < 3:
        raise DomainError(f'Pure fields of degree n >= 3 only, got n={n}.')
    violation = _hypothesis_violation(a, n)
    if violation:
        prime, reason = violation
        raise HypothesisError(f'Hypothesis H fails for a={a}, n={n} at p={prime}: {reason}.', prime)


def _r_p_capped(a: int, p: int, precision: int) -> tuple[int, bool]:
    if a % p == 0:
        return -1, False
    modulus = p**precision
    diff = (pow(a % modulus, p - 1, modulus) - 1) % modulus
    if diff == 0:
        return precision - 1, True
    return vp(diff, p) - 1, False


def r_p(a: int, p: int, precision: int = None) -> int:
    """
    r_p(a) = v_p(a^(p-1) - 1) - 1 for p not dividing a, and -1 otherwise.

    Parameters
    ----------
    a: int
        Nonzero radicand
    p: int
        A prime
    precision: int, optional
        The power of p the computation is carried out modulo; when the valuation reaches it, precision - 1 is
        returned as a lower bound (default 64)

    Returns
    -------
    int
        The value of r_p, at least -1
    """
    if a == 0:
        raise DomainError('r_p is undefined at a = 0.')
    if not isprime(p):
        raise DomainError(f'r_p needs a prime, got p={p}.')
    r, capped = _r_p_capped(a, p, precision or RP_DEFAULT_PRECISION)
    if capped:
        logger.debug(f'r_{p}({a}) reached the working precision, reporting the lower bound {r}.')
    return r


def d_p(a: int, p: int, e_p: int) -> int:
    """min(r_p(a), e_p) with the ramified branch clamped to 0."""
    if e_p < 1:
        raise DomainError(f'e_p must be positive for a prime dividing n, got {e_p}.')
    return max(0, min(r_p(a, p, e_p + RP_PRECISION_MARGIN), e_p))


def _validate_threshold_args(n: int, p: int, d: int, m: int) -> int:
    e_p = dict(degree_primes(n)).get(p, 0)
    if e_p == 0:
        raise DomainError(f'p={p} does not divide n={n}.')
    if not 0 <= d <= e_p:
        raise DomainError(f'd must lie in [0, {e_p}] for p={p}, n={n}; got {d}.')
    if not 1 <= m <= n - 1:
        raise DomainError(f'm must lie in [1, {n - 1}], got {m}.')
    return e_p


def k_pm(n: int, p: int, d: int, m: int) -> int:
    """The largest k in [0, d] with m >= n - n/p^k."""
    _validate_threshold_args(n, p, d, m)
    best = 0
    for k in range(1, d + 1):
        if m >= n - n // p**k:
            best = k
    return best


def k_pm_count(n: int, p: int, d: int, m: int) -> int:
    """Same value as k_pm, as the number of k in [1, d] whose threshold m clears."""
    _validate_threshold_args(n, p, d, m)
    return sum(1 for k in range(1, d + 1) if m >= n - n // p**k)


@lru_cache(maxsize=4096)
def k_sequence(n: int, p: int, d: int) -> tuple[int, ...]:
    return tuple(k_pm(n, p, d, m) for m in range(1, n))


def C_m(a: int, n: int, m: int) -> int:
    """The numerator factor prod a_j^floor(j m / n) over the squarefree decomposition of a."""
    if not 0 <= m <= n - 1:
        raise DomainError(f'm must lie in [0, {n - 1}], got {m}.')
    parts = squarefree_decomposition(a, n).parts
    result = 1
    for j, a_j in enumerate(parts, start=1):
        result *= a_j ** (j * m // n)
    return result


def wieferich_verdict(a: int, p: int) -> bool:
    """True iff a^(p-1) is not 1 mod p^2, the congruence deciding order-1 regularity when p || n."""
    if a % p == 0:
        raise DomainError(f'The Wieferich congruence needs p={p} not dividing a={a}.')
    return pow(a % p**2, p - 1, p**2) != 1


def _local_shape_unchecked(a: int, n: int, p: int, e_p: int) -> LocalShape:
    v = vp(a, p)
    r, capped = _r_p_capped(a, p, e_p + RP_PRECISION_MARGIN)
    if capped:
        logger.debug(f'r_{p}({a}) reached the working precision p^{e_p + RP_PRECISION_MARGIN}.')
    d = max(0, min(r, e_p))
    k = k_sequence(n, p, d)
    beta = None
    if fixture_covers(n, p):
        beta = beta_fixture(n, p, a % p ** (e_p + 1))
        for m, kk, b in zip(range(1, n), k, beta):
            if b.modulus != p**kk:
                raise InternalConsistencyError(
                    f'Beta fixture for n={n}, p={p}, class {a % p ** (e_p + 1)} has modulus {b.modulus} at m={m} '
                    f'but k_(p,m) = {kk}.'
                )
    return LocalShape(p, e_p, d, k, v > 0, beta, v_p_a=v, r_p=r, at_precision_cap=capped)


def local_shape(a: int, n: int, p: int) -> LocalShape:
    """
    Compute the local p-shape of the radicand a in degree n.

    Parameters
    ----------
    a: int
        Radicand satisfying Hypothesis H for n
    n: int
        The degree, at least 3
    p: int
        A prime dividing n

    Returns
    -------
    LocalShape
        Valuation, r_p, d_p, the k-sequence, and reduced betas for fixture-covered (n, p)
    """
    _require_hypothesis_H(a, n)
    e_p = dict(degree_primes(n)).get(p, 0)
    if e_p == 0:
        raise DomainError(f'p={p} does not divide n={n}.')
    return _local_shape_unchecked(a, n, p, e_p)


def _global_shape_unchecked(a: int, n: int) -> GlobalShape:
    return GlobalShape(n, tuple(_local_shape_unchecked(a, n, p, e) for p, e in degree_primes(n)))


def global_shape(a: int, n: int) -> GlobalShape:
    _require_hypothesis_H(a, n)
    return _global_shape_unchecked(a, n)


def _combined_beta(shape: GlobalShape, m: int) -> tuple[int, tuple[int, ...]] | None:
    """Glue the per-prime reductions of beta_m into one reduction modulo prod p^k_{p,m}, None if any is unknown."""
    residues, moduli = [], []
    for ls in shape.locals:
        if ls.k[m - 1] == 0:
            continue
        if ls.beta is None:
            return None
        residues.append(ls.beta[m - 1].coeffs)
        moduli.append(ls.beta[m - 1].modulus)
    if not moduli:
        return 1, (0,) * (shape.n - 1)
    coeffs = tuple(crt_pair(list(column), moduli)[0] for column in zip(*residues))
    return prod(moduli), coeffs


def basis_description(a: int, n: int) -> list[BasisElement]:
    """
    Describe the integral basis {1, (theta^m + beta_m) / D_m} with D_m = C_m(a) * prod_{p|n} p^k_{p,m}.

    Parameters
    ----------
    a: int
        Radicand satisfying Hypothesis H for n
    n: int
        The degree

    Returns
    -------
    list of BasisElement
        Elements for m = 0..n-1; numerators show beta_m when it is known and a placeholder otherwise
    """
    shape = global_shape(a, n)
    elements = [BasisElement(0, '1', 1, 1, tuple((p, 0) for p, _ in degree_primes(n)))]
    for m in range(1, n):
        c = C_m(a, n, m)
        exps = shape.k_exponents(m)
        denom = c
        for p, k in exps.items():
            denom *= p**k
        lead = render_theta_poly([], lead_power=m)
        beta = _combined_beta(shape, m)
        if beta is None:
            numerator = f'{lead} + β_{m}'
        else:
            numerator = render_theta_poly(beta[1], lead_power=m)
        elements.append(BasisElement(m, numerator, denom, c, tuple(sorted(exps.items()))))
    return elements
