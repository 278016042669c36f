# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Custom classes for reporting the results of pureshape verification sweeps, counts, and distributions"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import pandas as pd

__all__ = [
    'DiscLocalReport',
    'PeriodReport',
    'SharpnessWitness',
    'MinimalityReport',
    'AdmissibilityVerdict',
    'CountReport',
    'RpDistribution',
    'WieferichSplit',
]


@dataclass(frozen=True)
class DiscLocalReport:
    """
    The p-part of the discriminant of a pure field

    Attributes
    ----------
    p: int
        A prime dividing n
    e: int
        The exponent with p^e || n
    n_p: int
        The cofactor n / p^e
    t: int
        min(r_p(a), e), -1 on the ramified branch
    valuation: int
        v_p(d_K)
    """

    p: int
    e: int
    n_p: int
    t: int
    valuation: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class PeriodReport:
    """
    Outcome of checking that shapes only depend on a mod M(n)

    Attributes
    ----------
    n: int
        The degree
    bound: int
        All radicands with |a| <= bound were examined
    classes_checked: int
        The number of residue classes mod M(n) that had at least one admissible member
    members_checked: int
        The number of radicands whose shape was computed
    conflicts: list of tuple
        (a, a', prime, field) entries, where a' is the table representative or an earlier member of the class
    """

    n: int
    bound: int
    classes_checked: int = 0
    members_checked: int = 0
    conflicts: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.conflicts

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'bound': self.bound,
            'classes_checked': self.classes_checked,
            'members_checked': self.members_checked,
            'passed': self.passed,
            'conflicts': [list(c) for c in self.conflicts],
        }


@dataclass(frozen=True)
class SharpnessWitness:
    """
    Two radicands congruent modulo p^e_p but not modulo p^(e_p + 1) whose local p-shapes differ

    Attributes
    ----------
    n: int
        The degree
    p: int
        The prime the witness certifies
    e_p: int
        The exponent with p^e_p || n
    a: int
        The first radicand, 1 + p^e_p u
    a_prime: int
        The second radicand, 1 + p^(e_p + 1) u'
    d: int
        d_p(a)
    d_prime: int
        d_p(a')
    first_differing_m: int or None
        The smallest m where k_{p,m} differs, None if only betas or d_p differ
    k: tuple of int
        The k-sequence of a
    k_prime: tuple of int
        The k-sequence of a'
    """

    n: int
    p: int
    e_p: int
    a: int
    a_prime: int
    d: int
    d_prime: int
    first_differing_m: int | None
    k: tuple[int, ...]
    k_prime: tuple[int, ...]

    @property
    def congruence_level(self) -> int:
        """The largest j with a = a' mod p^j."""
        diff, j = abs(self.a - self.a_prime), 0
        while diff % self.p ** (j + 1) == 0:
            j += 1
        return j

    def to_dict(self) -> dict:
        record = asdict(self)
        record['k'], record['k_prime'] = list(self.k), list(self.k_prime)
        record['congruence_level'] = self.congruence_level
        return record


@dataclass
class MinimalityReport:
    """
    Refutations of the candidate periods M(n)/p for each prime p dividing n

    Attributes
    ----------
    n: int
        The degree
    M: int
        The modulus M(n)
    bound: int
        Radicands in the refuting pairs are kept within |a| <= bound
    refutations: dict
        Maps each p to (N, a, a', differing fields), a pair congruent modulo N = M(n)/p with different shapes
    unrefuted: list of int
        Primes for which no pair was found, their candidate periods would survive
    """

    n: int
    M: int
    bound: int
    refutations: dict = field(default_factory=dict)
    unrefuted: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.unrefuted

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'M': self.M,
            'bound': self.bound,
            'passed': self.passed,
            'refutations': [
                {'p': p, 'N': N, 'a': a, 'a_prime': b, 'differs_in': [list(d) for d in diffs]}
                for p, (N, a, b, diffs) in sorted(self.refutations.items())
            ],
            'unrefuted': list(self.unrefuted),
        }


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """
    Whether a progression r mod q forces a fixed n-th power divisor

    Attributes
    ----------
    verdict: str
        One of 'inadmissible', 'weak', 'strict'
    witnesses: tuple of tuple
        (p, v_p(r), alpha) for each p^alpha || q, v_p(r) capped at alpha
    """

    verdict: str
    witnesses: tuple[tuple[int, int, int], ...]

    @property
    def admissible(self) -> bool:
        return self.verdict != 'inadmissible'

    @property
    def strict(self) -> bool:
        return self.verdict == 'strict'

    def to_dict(self) -> dict:
        return {'verdict': self.verdict, 'witnesses': [{'p': p, 'v': v, 'alpha': al} for p, v, al in self.witnesses]}


@dataclass(frozen=True)
class CountReport:
    """Exact count of n-th-power-free a in [-X, X] with a = r mod q, next to its asymptotic main term."""

    X: int
    q: int
    r: int
    n: int
    exact: int
    main_term: float
    admissibility: AdmissibilityVerdict

    @property
    def relative_error(self) -> float:
        if self.main_term == 0:
            return 0.0 if self.exact == 0 else float('inf')
        return abs(self.exact - self.main_term) / self.main_term

    def to_dict(self) -> dict:
        return {
            'X': self.X,
            'q': self.q,
            'r': self.r,
            'n': self.n,
            'exact': self.exact,
            'main_term': self.main_term,
            'relative_error': self.relative_error,
            'admissibility': self.admissibility.to_dict(),
        }


@dataclass(frozen=True)
class RpDistribution:
    """
    Exhaustive distribution of v_p(u^(p-1) - 1) over the units u mod p^(e+1)

    Attributes
    ----------
    p: int
        The prime
    e: int
        Units are taken mod p^(e+1)
    units: int
        phi(p^(e+1))
    counts: tuple of tuple
        (k, #{u : v_p(u^(p-1) - 1) >= k}) for k = 1..e+1
    expected: tuple of int or None
        (p-1) p^(e-k+1) for each k when the closed law applies (odd p), None otherwise
    capped: tuple of int
        Units with u^(p-1) = 1 mod p^(e+1), whose valuation is only known to be at least e+1
    """

    p: int
    e: int
    units: int
    counts: tuple[tuple[int, int], ...]
    expected: tuple[int, ...] | None
    capped: tuple[int, ...] = ()

    @property
    def law_holds(self) -> bool | None:
        if self.expected is None:
            return None
        return tuple(c for _, c in self.counts) == self.expected

    @property
    def probabilities(self) -> dict[int, Fraction]:
        """P(r_p = j) for j = 0..e-1, with the top level j = e gathering every unit with r_p >= e."""
        at_least = dict(self.counts)
        probs = {}
        for j in range(self.e):
            probs[j] = Fraction(at_least[j + 1] - at_least[j + 2], self.units)
        probs[self.e] = Fraction(at_least[self.e + 1], self.units)
        return probs

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.counts, columns=['k', 'count'])
        if self.expected is not None:
            frame['expected'] = list(self.expected)
        return frame

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'e': self.e,
            'units': self.units,
            'counts': [{'k': k, 'count': c} for k, c in self.counts],
            'expected': list(self.expected) if self.expected is not None else None,
            'law_holds': self.law_holds,
            'probabilities': {str(j): str(pr) for j, pr in self.probabilities.items()},
            'capped': list(self.capped),
        }

    def export_to_json(self, file: str = None) -> None | dict:
        """Save the distribution as JSON, or return the JSON dictionary when no file is given."""
        report_json = self.to_dict()
        report_json['table'] = self.to_frame().to_json()
        if file:
            with open(file, 'w') as f:
                json.dump(report_json, f)
            return None
        return report_json


@dataclass(frozen=True)
class WieferichSplit:
    """
    Proportions of units with r_p = 0 and r_p >= 1

    Attributes
    ----------
    p: int
        The prime
    e: int
        The enumeration modulus is p^(e+1)
    r0: Fraction
        Proportion with r_p = 0
    r_ge1: Fraction
        Proportion with r_p >= 1
    empirical: bool
        True when the proportions come from enumeration alone (p = 2)
    capped: tuple of int
        Units whose valuation hit the enumeration precision
    """

    p: int
    e: int
    r0: Fraction
    r_ge1: Fraction
    empirical: bool = False
    capped: tuple[int, ...] = ()

    def __iter__(self):
        return iter((self.r0, self.r_ge1))

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'e': self.e,
            'r0': str(self.r0),
            'r_ge1': str(self.r_ge1),
            'empirical': self.empirical,
            'capped': list(self.capped),
        }
