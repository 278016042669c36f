# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

from __future__ import annotations

from types import MappingProxyType

from pureshape.exceptions import NotYetSupportedError
from pureshape.models.shapes import BetaReduction

__all__ = ['BETA_FIXTURES', 'beta_fixture', 'fixture_covers']

# Nontrivial reduced corrections keyed by (n, p) then by the residue class of a mod p^(e_p + 1), then by m.
# Each entry is (modulus, coefficients of theta^0..theta^(n-2)). Classes and indices not listed are trivial (mod 1).
BETA_FIXTURES = MappingProxyType(
    {
        (4, 2): MappingProxyType(
            {
                1: {2: (2, (1, 0, 0)), 3: (4, (1, 1, 1))},
                5: {2: (2, (1, 0, 0)), 3: (2, (0, 1, 0))},
            }
        ),
        (6, 2): MappingProxyType({1: {3: (2, (1, 0, 0, 0, 0)), 4: (2, (0, 1, 0, 0, 0)), 5: (2, (0, 0, 1, 0, 0))}}),
        (6, 3): MappingProxyType(
            {
                1: {4: (3, (1, 0, 1, 0, 0)), 5: (3, (0, 1, 0, 1, 0))},
                8: {4: (3, (1, 0, 2, 0, 0)), 5: (3, (0, 1, 0, 2, 0))},
            }
        ),
    }
)

# The local moduli p^(e_p + 1) the fixture classes are taken in
_CLASS_MODULI = {(4, 2): 8, (6, 2): 4, (6, 3): 9}


def fixture_covers(n: int, p: int) -> bool:
    return (n, p) in BETA_FIXTURES


def beta_fixture(n: int, p: int, residue: int) -> tuple[BetaReduction, ...]:
    """
    Look up the reduced corrections beta_1..beta_{n-1} for a residue class of radicands.

    Parameters
    ----------
    n: int
        The degree, 4 or 6
    p: int
        A prime dividing n
    residue: int
        The class of a modulo p^(e_p + 1); any integer is reduced to its canonical representative

    Returns
    -------
    tuple of BetaReduction
        One reduction for each m = 1..n-1, trivial (modulus 1, all zero) where the class has no correction
    """
    if not fixture_covers(n, p):
        raise NotYetSupportedError(f'No reduced beta table is shipped for n={n}, p={p}.')
    table = BETA_FIXTURES[(n, p)].get(residue % _CLASS_MODULI[(n, p)], {})
    reductions = []
    for m in range(1, n):
        modulus, coeffs = table.get(m, (1, (0,) * (n - 1)))
        reductions.append(BetaReduction(m, modulus, coeffs))
    return tuple(reductions)
