# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Tests for the shape invariants and the integral basis description"""

import pytest

from pureshape.exceptions import DomainError, HypothesisError
from pureshape.math.arith import factorize, modulus_M
from pureshape.shape import *


def test_hypothesis_H():
    assert hypothesis_H(5, 4)
    assert not hypothesis_H(4, 4)
    assert hypothesis_H(8, 4)
    assert not hypothesis_H(16, 4)
    # Not n-th-power-free at a prime that does not divide n
    assert not hypothesis_H(3**4 * 2, 4)
    assert hypothesis_H(-6, 6)
    with pytest.raises(DomainError):
        hypothesis_H(5, 2)
    with pytest.raises(DomainError):
        hypothesis_H(0, 4)


def test_r_p():
    assert r_p(5, 2) == 1
    assert r_p(8, 3) == 1
    assert r_p(6, 3) == -1
    assert r_p(17, 2) == 3
    assert r_p(-1, 2) == 0
    assert r_p(2, 3) == 0
    # a^(p-1) = 1 exactly: only the working precision bounds the answer
    assert r_p(1, 2) == 63
    assert r_p(1, 2, precision=10) == 9
    with pytest.raises(DomainError):
        r_p(5, 4)
    with pytest.raises(DomainError):
        r_p(0, 2)


def test_d_p():
    assert d_p(17, 2, 2) == 2
    assert d_p(3, 2, 2) == 0
    assert d_p(5, 2, 2) == 1
    assert d_p(6, 3, 1) == 0
    with pytest.raises(DomainError):
        d_p(5, 2, 0)


def test_k_pm():
    assert k_pm(4, 2, 2, 3) == 2
    assert k_pm(6, 3, 1, 4) == 1
    assert k_pm(6, 3, 1, 3) == 0
    assert k_pm(9, 3, 2, 8) == 2
    assert k_sequence(9, 3, 1) == (0, 0, 0, 0, 0, 1, 1, 1)
    with pytest.raises(DomainError):
        k_pm(4, 3, 0, 1)
    with pytest.raises(DomainError):
        k_pm(4, 2, 3, 1)
    with pytest.raises(DomainError):
        k_pm(4, 2, 1, 4)


def test_k_pm_closed_form_agrees():
    for n in range(3, 61):
        for p, e in degree_primes(n):
            for d in range(e + 1):
                seq = k_sequence(n, p, d)
                # Nondecreasing in m and bounded by d
                assert list(seq) == sorted(seq)
                assert all(0 <= k <= d for k in seq)
                for m in range(1, n):
                    assert k_pm(n, p, d, m) == k_pm_count(n, p, d, m) == seq[m - 1]
                # d = 0 is exactly the case with no denominators at p
                assert (d == 0) == (max(seq) == 0)


def test_C_m():
    assert C_m(12, 4, 2) == 2
    assert C_m(8, 4, 3) == 4
    assert all(C_m(30, 7, m) == 1 for m in range(7))
    assert C_m(12, 4, 0) == 1
    with pytest.raises(DomainError):
        C_m(16, 4, 1)
    with pytest.raises(DomainError):
        C_m(12, 4, 4)


def test_wieferich_verdict():
    # 3^4 = 81 = 6 mod 25, while 7^4 = 2401 = 1 mod 25
    assert wieferich_verdict(3, 5)
    assert not wieferich_verdict(7, 5)
    # 1093 is a Wieferich prime: 2^1092 = 1 mod 1093^2
    assert not wieferich_verdict(2, 1093)
    with pytest.raises(DomainError):
        wieferich_verdict(10, 5)


def test_local_shape():
    assert local_shape(5, 4, 2).k == (0, 1, 1)
    assert local_shape(7, 4, 2).k == (0, 0, 0)
    assert local_shape(10, 9, 3).k == (0, 0, 0, 0, 0, 1, 1, 1)
    ram = local_shape(8, 4, 2)
    assert ram.ramified and ram.d_p == 0 and ram.v_p_a == 3 and ram.r_p == -1
    assert ram.k == (0, 0, 0)
    capped = local_shape(1, 4, 2)
    assert capped.at_precision_cap and capped.d_p == 2
    with pytest.raises(HypothesisError) as err:
        local_shape(4, 4, 2)
    assert err.value.prime == 2
    with pytest.raises(DomainError):
        local_shape(5, 4, 3)


def test_global_shape():
    gs = global_shape(73, 6)
    assert gs.local(2).k == (0, 0, 1, 1, 1)
    assert gs.local(3).k == (0, 0, 0, 1, 1)
    gs = global_shape(7, 6)
    assert all(max(ls.k) == 0 for ls in gs.locals)
    with pytest.raises(HypothesisError):
        global_shape(4, 6)


def test_shape_invariant_under_period():
    for n in (4, 6, 9, 10):
        M = modulus_M(n)
        for a in range(-300, 301):
            if a == 0 or not hypothesis_H(a, n) or not hypothesis_H(a + M, n):
                continue
            assert global_shape(a, n) == global_shape(a + M, n)


def test_local_determinacy():
    # Members of one class mod p^(e_p + 1) share their local shape
    for n in (4, 6, 8, 9, 12):
        for p, e in degree_primes(n):
            q = p ** (e + 1)
            seen = {}
            for a in range(-(10**4), 10**4 + 1):
                if a == 0 or not hypothesis_H(a, n):
                    continue
                ls = local_shape(a, n, p)
                assert seen.setdefault(a % q, ls) == ls


def test_basis_description():
    basis = basis_description(5, 4)
    assert [el.denominator for el in basis] == [1, 1, 2, 2]
    assert [el.numerator for el in basis] == ['1', 'θ', 'θ^2 + 1', 'θ^3 + θ']

    basis = basis_description(17, 4)
    assert [el.denominator for el in basis] == [1, 1, 2, 4]
    assert basis[3].numerator == 'θ^3 + θ^2 + θ + 1'

    # 24 = 2^3 * 3 sits on the ramified branch: denominators come from C_m alone
    basis = basis_description(24, 4)
    assert [el.denominator for el in basis] == [1, 1, 2, 4]
    assert [el.c_m for el in basis] == [1, 1, 2, 4]
    assert all(k == 0 for el in basis for _, k in el.p_exponents)
    assert basis[2].numerator == 'θ^2'


def test_basis_description_crt():
    # Both 2-adic and 3-adic corrections are glued modulo 6
    basis = basis_description(73, 6)
    assert [el.denominator for el in basis] == [1, 1, 2, 6, 6]
    assert basis[3].numerator == 'θ^3 + 1'
    assert basis[4].numerator == 'θ^4 + 4θ^2 + 3θ + 4'
    assert basis[5].numerator == 'θ^5 + 4θ^3 + 3θ^2 + 4θ'


def test_basis_description_placeholders():
    basis = basis_description(10, 9)
    assert basis[1].numerator == 'θ'
    assert basis[6].numerator == 'θ^6 + β_6'
    assert [el.denominator for el in basis] == [1, 1, 1, 1, 1, 1, 3, 3, 3]
    # Denominator primes away from a all divide n
    for a, n in ((10, 9), (73, 6), (24, 4), (11, 12), (-35, 10)):
        for el in basis_description(a, n):
            extra = el.denominator // el.c_m
            assert all(n % q == 0 for q in factorize(extra).primes)
