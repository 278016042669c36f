# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Exact integer arithmetic primitives: factorization, p-adic valuations, radicals, Möbius values, n-th-power-freeness,
the squarefree decomposition of a radicand, and binomial valuations by carry counting.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt, prod

import numpy as np
from sympy import factorint, integer_nthroot, isprime
from sympy.ntheory.modular import crt

from pureshape.exceptions import DomainError, SizeBudgetError
from pureshape.helpers import DEFAULT_FACTOR_BOUND, TRIAL_DIVISION_LIMIT
from pureshape.models.integers import FactoredInteger, SquarefreeDecomposition

__all__ = [
    'prime_sieve',
    'mobius_sieve',
    'factorize',
    'vp',
    'radical',
    'modulus_M',
    'is_nth_power_free',
    'squarefree_decomposition',
    'mobius',
    'kummer_binomial_valuation',
    'legendre_factorial_valuation',
    'crt_pair',
    'power_free_segment',
]


def prime_sieve(limit: int) -> np.ndarray:
    """
    Sieve of Eratosthenes over a numpy boolean array.

    Parameters
    ----------
    limit: int
        Inclusive upper bound for the primes returned

    Returns
    -------
    numpy.ndarray
        The int64 array of all primes <= limit in increasing order
    """
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


@lru_cache(maxsize=4)
def _trial_primes(limit: int) -> tuple[int, ...]:
    # Python ints iterate far faster than numpy scalars inside the division loop
    return tuple(int(p) for p in prime_sieve(limit))


def mobius_sieve(limit: int) -> np.ndarray:
    """Möbius values mu(0..limit) as an int8 array, with mu(0) = 0."""
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    for p in prime_sieve(limit):
        p = int(p)
        mu[::p] *= -1
        if p * p <= limit:
            mu[:: p * p] = 0
    return mu


def factorize(x: int, bound: int = DEFAULT_FACTOR_BOUND, trial_limit: int = TRIAL_DIVISION_LIMIT) -> FactoredInteger:
    """
    Fully factor a nonzero integer. Trial division runs over a cached prime sieve; a cofactor left over once the sieve
    is exhausted is either certified prime or split by sympy.

    Parameters
    ----------
    x: int
        The integer to factor, must be nonzero
    bound: int, optional
        Largest magnitude accepted (default 2^63)
    trial_limit: int, optional
        Size of the prime sieve used for trial division (default 10^6)

    Returns
    -------
    FactoredInteger
        The sign, magnitude, and sorted (prime, exponent) pairs of x
    """
    if x == 0:
        raise DomainError('Cannot factor 0, its valuations are infinite.')
    m = abs(x)
    if m > bound:
        raise SizeBudgetError(f'Cannot factor {x}: magnitude exceeds the configured bound {bound}.')
    sign = 1 if x > 0 else -1
    factors = {}
    for p in _trial_primes(trial_limit):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors[p] = e
    if m > 1:
        # Anything left is prime once the sieve covered its square root, otherwise defer to sympy
        if m < trial_limit * trial_limit or isprime(m):
            factors[m] = factors.get(m, 0) + 1
        else:
            for p, e in factorint(m).items():
                factors[int(p)] = factors.get(int(p), 0) + e
    return FactoredInteger(sign, abs(x), tuple(sorted(factors.items())))


def vp(x: int, p: int) -> int:
    """
    The p-adic valuation of a nonzero integer.

    Notes
    -----
    The primality of p is not checked here since this sits inside every inner loop of the package; callers pass
    primes taken from a factorization.
    """
    if x == 0:
        raise DomainError(f'v_{p}(0) is infinite; callers must handle the zero case themselves.')
    if p < 2:
        raise DomainError(f'Valuations are only defined for primes, got p={p}.')
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def radical(n: int) -> int:
    if n < 1:
        raise DomainError(f'The radical is defined for positive integers, got {n}.')
    return prod(factorize(n).primes)


def modulus_M(n: int) -> int:
    """The global shape period M(n) = n * rad(n), equivalently the product of p^(e_p + 1) over p^e_p || n."""
    if n < 3:
        raise DomainError(f'Pure fields of degree n >= 3 only, got n={n}.')
    return prod(p ** (e + 1) for p, e in factorize(n).factors)


def is_nth_power_free(a: int, n: int) -> bool:
    if a == 0:
        raise DomainError('0 is divisible by every n-th power.')
    if n < 2:
        raise DomainError(f'Power-freeness needs n >= 2, got n={n}.')
    return all(e < n for _, e in factorize(a).factors)


def squarefree_decomposition(a: int, n: int) -> SquarefreeDecomposition:
    """Group the primes of a by exponent: a_j is the product of primes q with v_q(a) = j."""
    fact = factorize(a)
    parts = [1] * (n - 1)
    for q, e in fact.factors:
        if e >= n:
            raise DomainError(f'{a} is not {n}-th-power-free: {q}^{e} divides it.', [q])
        parts[e - 1] *= q
    return SquarefreeDecomposition(n, tuple(parts))


def mobius(d: int) -> int:
    if d < 1:
        raise DomainError(f'mu is defined for positive integers, got {d}.')
    fact = factorize(d)
    if any(e > 1 for _, e in fact.factors):
        return 0
    return -1 if len(fact.factors) % 2 else 1


def kummer_binomial_valuation(n: int, i: int, p: int) -> int:
    """
    v_p(binomial(n, i)) as the number of carries when adding i and n - i in base p.

    Parameters
    ----------
    n: int
        The binomial top, n >= 0
    i: int
        The binomial bottom, 0 <= i <= n
    p: int
        The prime base

    Returns
    -------
    int
        The count of carries, equal to the p-adic valuation of binomial(n, i)
    """
    if not 0 <= i <= n:
        raise DomainError(f'Need 0 <= i <= n, got i={i}, n={n}.')
    x, y = i, n - i
    carries, carry = 0, 0
    while x or y or carry:
        digit_sum = x % p + y % p + carry
        carry = 1 if digit_sum >= p else 0
        carries += carry
        x //= p
        y //= p
    return carries


def legendre_factorial_valuation(n: int, p: int) -> int:
    """v_p(n!) by Legendre's formula."""
    total, pk = 0, p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def crt_pair(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    """Glue residues modulo pairwise coprime moduli, returning (x, modulus) with x in [0, modulus)."""
    if not moduli:
        return 0, 1
    solved = crt(moduli, residues)
    if solved is None:
        raise DomainError(f'The congruences {residues} mod {moduli} have no common solution.')
    x, modulus = solved
    return int(x) % int(modulus), int(modulus)


def power_free_segment(lo: int, hi: int, n: int) -> np.ndarray:
    """
    Boolean mask over the integers lo..hi-1 (with 1 <= lo) marking the n-th-power-free ones.

    Only p^n for primes p <= (hi - 1)^(1/n) are struck out, since an integer is n-th-power-free exactly when no prime
    n-th power divides it.
    """
    if lo < 1 or hi < lo:
        raise DomainError(f'Power-free segments need 1 <= lo <= hi, got [{lo}, {hi}).')
    if n < 2:
        raise DomainError(f'Power-freeness needs n >= 2, got n={n}.')
    mask = np.ones(hi - lo, dtype=bool)
    root = int(integer_nthroot(max(hi - 1, 1), n)[0])
    for p in prime_sieve(root):
        pn = int(p) ** n
        start = -(-lo // pn) * pn
        mask[start - lo :: pn] = False
    return mask
