# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Tests for the shipped beta correction tables"""

import pytest

from pureshape.cookbook import *
from pureshape.exceptions import NotYetSupportedError
from pureshape.shape import d_p, k_sequence


def test_quartic_fixtures():
    betas = beta_fixture(4, 2, 1)
    assert [b.m for b in betas] == [1, 2, 3]
    assert betas[0].is_trivial
    assert (betas[1].modulus, betas[1].coeffs) == (2, (1, 0, 0))
    assert (betas[2].modulus, betas[2].coeffs) == (4, (1, 1, 1))
    # Any integer is reduced into its class mod 8
    assert beta_fixture(4, 2, 17) == betas
    assert beta_fixture(4, 2, 5)[2].coeffs == (0, 1, 0)
    assert all(b.is_trivial for b in beta_fixture(4, 2, 3))


def test_sextic_fixtures():
    assert fixture_covers(6, 2) and fixture_covers(6, 3)
    betas = beta_fixture(6, 3, 8)
    assert betas[3].render() == '2θ^2 + 1 (mod 3)'
    assert betas[4].render() == '2θ^3 + θ (mod 3)'
    assert beta_fixture(6, 2, 5)[2].coeffs == (1, 0, 0, 0, 0)


def test_fixture_moduli_match_k_sequences():
    # Every nontrivial correction is reduced modulo exactly p^k_{p,m}
    e = {(4, 2): 2, (6, 2): 1, (6, 3): 1}
    for (n, p), classes in BETA_FIXTURES.items():
        for residue in classes:
            d = d_p(residue, p, e[(n, p)])
            for b in beta_fixture(n, p, residue):
                k = k_sequence(n, p, d)[b.m - 1]
                assert b.modulus in (1, p**k)


def test_uncovered_degrees():
    assert not fixture_covers(9, 3)
    with pytest.raises(NotYetSupportedError):
        beta_fixture(9, 3, 1)
