# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Local and global integral basis shapes of pure number fields, and their rendered basis elements."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ['BetaReduction', 'LocalShape', 'GlobalShape', 'BasisElement', 'render_theta_poly']

THETA = 'θ'


def render_theta_poly(coeffs, lead_power: int = None) -> str:
    """Render sum(c_i * theta^i) (plus an optional monic theta^lead_power) with descending powers."""
    terms = []
    if lead_power is not None:
        terms.append(_theta_term(1, lead_power))
    for i in reversed(range(len(coeffs))):
        if coeffs[i]:
            terms.append(_theta_term(coeffs[i], i))
    return ' + '.join(terms) if terms else '0'


def _theta_term(c: int, i: int) -> str:
    if i == 0:
        return str(c)
    power = THETA if i == 1 else f'{THETA}^{i}'
    return power if c == 1 else f'{c}{power}'


@dataclass(frozen=True)
class BetaReduction:
    """
    The correction term beta_m of the m-th basis element reduced modulo its local denominator

    Attributes
    ----------
    m: int
        Basis index
    modulus: int
        The modulus p^k_{p,m} the coefficients are reduced by, 1 for the trivial class
    coeffs: tuple of int
        The n - 1 coefficients multiplying theta^0..theta^{n-2}, zero from index m onwards
    """

    m: int
    modulus: int
    coeffs: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.modulus == 1

    def render(self) -> str:
        return f'{render_theta_poly(self.coeffs)} (mod {self.modulus})'

    def to_dict(self) -> dict:
        return {'m': self.m, 'modulus': self.modulus, 'coeffs': list(self.coeffs)}


@dataclass(frozen=True)
class LocalShape:
    """
    The local p-shape of a radicand: the denominator exponents k_{p,m} and, where known, the reduced beta_m

    Equality and hashing only use the residue-class invariants (k-sequence, d_p, the ramified dichotomy, and betas);
    the exact valuation v_p(a) and r_p(a) are carried for reporting.

    Attributes
    ----------
    p: int
        The prime dividing n
    e_p: int
        The exponent with p^e_p || n
    d_p: int
        min(r_p, e_p) clamped below at 0
    k: tuple of int
        (k_{p,1}, ..., k_{p,n-1})
    ramified: bool
        True when p divides a
    beta: tuple of BetaReduction or None
        Reduced corrections for each m = 1..n-1 where a fixture table covers (n, p)
    v_p_a: int
        The valuation of a at p
    r_p: int
        v_p(a^(p-1) - 1) - 1, or -1 when p divides a
    at_precision_cap: bool
        Whether r_p hit the working precision and is only a lower bound
    """

    p: int
    e_p: int
    d_p: int
    k: tuple[int, ...]
    ramified: bool
    beta: tuple[BetaReduction, ...] | None = None
    v_p_a: int = field(default=0, compare=False)
    r_p: int = field(default=0, compare=False)
    at_precision_cap: bool = field(default=False, compare=False)

    def to_dict(self) -> dict:
        record = {'p': self.p, 'e': self.e_p, 'd': self.d_p, 'k': list(self.k), 'ramified': self.ramified}
        if self.beta is not None:
            record['beta'] = [b.to_dict() for b in self.beta]
        return record


@dataclass(frozen=True)
class GlobalShape:
    """
    The tuple of local shapes over all primes dividing n

    Attributes
    ----------
    n: int
        The degree
    locals: tuple of LocalShape
        One local shape per prime dividing n, sorted by prime
    """

    n: int
    locals: tuple[LocalShape, ...]

    @property
    def locals_by_prime(self) -> dict[int, LocalShape]:
        return {ls.p: ls for ls in self.locals}

    def local(self, p: int) -> LocalShape:
        return self.locals_by_prime[p]

    @property
    def denominator_profile(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """The (p, k-sequence) pairs; two radicands with the same profile have the same basis denominators at n."""
        return tuple((ls.p, ls.k) for ls in self.locals)

    def k_exponents(self, m: int) -> dict[int, int]:
        return {ls.p: ls.k[m - 1] for ls in self.locals}

    def differences(self, other: GlobalShape) -> list[tuple[int, str]]:
        """The (prime, field) pairs where two shapes disagree."""
        diffs = []
        for mine, theirs in zip(self.locals, other.locals):
            for name in ('d_p', 'k', 'ramified', 'beta'):
                if getattr(mine, name) != getattr(theirs, name):
                    diffs.append((mine.p, name))
        return diffs

    def to_dict(self) -> dict:
        return {'n': self.n, 'primes': [ls.to_dict() for ls in self.locals]}


@dataclass(frozen=True)
class BasisElement:
    """One element (theta^m + beta_m) / D_m of the integral basis description."""

    m: int
    numerator: str
    denominator: int
    c_m: int
    p_exponents: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            'm': self.m,
            'numerator': self.numerator,
            'denominator': self.denominator,
            'C_m': self.c_m,
            'p_exponents': {str(p): k for p, k in self.p_exponents},
        }
