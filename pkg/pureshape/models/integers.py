# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Factored integers and the squarefree pairwise-coprime decomposition of a radicand."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

__all__ = ['FactoredInteger', 'SquarefreeDecomposition']


@dataclass(frozen=True)
class FactoredInteger:
    """
    An integer stored as its sign, magnitude, and full prime factorization

    Attributes
    ----------
    sign: int
        One of -1, 0, or +1
    magnitude: int
        The absolute value of the integer
    factors: tuple of (int, int)
        The (prime, exponent) pairs of the magnitude sorted by prime, empty for magnitudes 0 and 1
    """

    sign: int
    magnitude: int
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return self.sign * self.magnitude

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        """Exponent of the prime p in the magnitude, zero if p does not divide it."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """
    Writes |a| = a_1 * a_2^2 * ... * a_{n-1}^{n-1} with squarefree pairwise coprime parts

    Attributes
    ----------
    n: int
        The degree the decomposition is taken with respect to
    parts: tuple of int
        The parts (a_1, ..., a_{n-1}); a_j is the product of the primes appearing in a to exactly the j-th power
    """

    n: int
    parts: tuple[int, ...]

    def part(self, j: int) -> int:
        return self.parts[j - 1]

    def magnitude(self) -> int:
        return prod(a_j**j for j, a_j in enumerate(self.parts, start=1))
