# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Tests for power-free counting, main terms, shape class densities and the distribution of r_p"""

import math
from fractions import Fraction

import pytest
import sympy

from pureshape.count import *
from pureshape.exceptions import DomainError, SizeBudgetError
from pureshape.helpers import MAX_SIEVE_BOUND
from pureshape.math.arith import is_nth_power_free, mobius


def _brute_count(X, q, r, n):
    return sum(1 for a in range(-X, X + 1) if a != 0 and a % q == r and is_nth_power_free(a, n))


def test_count_exact_small():
    # 1, 2, 3, 5, 6, 7, 10 and their negatives
    assert count_exact(10, 1, 0, 2) == 14
    assert count_exact(10, 8, 1, 4) == _brute_count(10, 8, 1, 4)
    for q, r, n in ((8, 1, 4), (8, 0, 3), (12, 5, 2), (9, 3, 2), (16, 0, 4)):
        assert count_exact(500, q, r, n) == _brute_count(500, q, r, n)


def test_count_exact_mobius_identity():
    for X, n in ((1000, 2), (5000, 3), (10**5, 4)):
        expected = sum(mobius(d) * (X // d**n) for d in range(1, math.isqrt(X) + 1) if d**n <= X)
        assert count_exact(X, 1, 0, n) == 2 * expected


def test_count_exact_segments_and_workers():
    X = 5 * 2**19
    single = count_exact(X, 9, 4, 3)
    assert count_exact(X, 9, 4, 3, memory_mb=1) == single
    assert count_exact(X, 9, 4, 3, memory_mb=1, workers=2) == single


def test_count_exact_errors():
    with pytest.raises(DomainError):
        count_exact(10, 8, 8, 4)
    with pytest.raises(DomainError):
        count_exact(10, 0, 0, 4)
    with pytest.raises(DomainError):
        count_exact(0, 1, 0, 4)
    with pytest.raises(SizeBudgetError):
        count_exact(MAX_SIEVE_BOUND + 1, 1, 0, 4)


def test_admissibility():
    assert admissibility(1, 8, 4).verdict == 'strict'
    assert admissibility(4, 8, 4).verdict == 'strict'
    assert admissibility(8, 16, 4).verdict == 'strict'
    weak = admissibility(0, 8, 4)
    assert weak.verdict == 'weak' and weak.admissible and not weak.strict
    assert weak.witnesses == ((2, 3, 3),)
    bad = admissibility(0, 16, 4)
    assert bad.verdict == 'inadmissible' and not bad.admissible
    assert admissibility(0, 1, 3).strict
    assert admissibility(2, 6, 2).verdict == 'weak'
    assert admissibility(9, 36, 2).verdict == 'inadmissible'


def test_is_n_full():
    assert is_n_full(1296, 4)
    assert not is_n_full(1296, 5)
    assert not is_n_full(72, 3)
    assert is_n_full(1, 3)


def test_n_full_moduli_have_uniform_main_terms():
    X = 10**6
    for q, n in ((16, 4), (1296, 4), (27, 3)):
        assert is_n_full(q, n)
        admissible = [r for r in range(q) if admissibility(r, q, n).admissible]
        assert all(admissibility(r, q, n).strict for r in admissible)
        assert len({round(main_term(X, q, r, n), 6) for r in admissible}) == 1


def test_local_count_factor():
    assert local_count_factor(2, 3, 0, 4) == 1
    assert local_count_factor(2, 3, 3, 4) == Fraction(1, 2)
    assert local_count_factor(2, 5, 4, 4) == 0


def test_main_term():
    X = 10**6
    assert main_term(X, 1, 0, 2) == pytest.approx(2 * X * 6 / math.pi**2)
    zeta4 = math.pi**4 / 90
    assert main_term(X, 8, 1, 4) == pytest.approx((2 * X / 8) * (16 / 15) / zeta4)
    assert main_term(X, 8, 0, 4) == pytest.approx((2 * X / 8) * 0.5 * (16 / 15) / zeta4)
    assert main_term(X, 16, 0, 4) == 0
    assert zeta_value(4) == sympy.pi**4 / 90


def test_main_terms_sum_over_classes():
    X = 10**6
    for q, n in ((8, 2), (8, 4), (12, 2), (16, 3), (18, 3), (16, 4)):
        total = sum(main_term(X, q, r, n) for r in range(q))
        assert total == pytest.approx(main_term(X, 1, 0, n))


def test_count_report():
    rep = count_report(10**5, 8, 1, 4)
    assert rep.exact == count_exact(10**5, 8, 1, 4)
    assert rep.admissibility.strict
    assert rep.relative_error < 0.01
    empty = count_report(100, 16, 0, 4)
    assert empty.exact == 0 and empty.main_term == 0 and empty.relative_error == 0


def test_density_shape_classes():
    assert density_shape_classes(4, {1}) == pytest.approx(12 / math.pi**4)
    assert density_shape_classes(4, [1, 3, 5, 7]) == pytest.approx(48 / math.pi**4)
    assert symbolic_density(4, 1) == 12 / sympy.pi**4
    with pytest.raises(DomainError) as e:
        density_shape_classes(4, {1, 4, 8})
    assert e.value.offenders == [4, 8]


def test_shape_class_partition():
    partition = shape_class_partition(6)
    assert sorted(len(classes) for classes in partition.values()) == [2, 4, 6, 12]
    assert sum(len(classes) for classes in partition.values()) == 24
    fine = shape_class_partition(6, granularity='shape')
    assert len(fine) >= len(partition)
    with pytest.raises(DomainError):
        shape_class_partition(6, granularity='betas')


def test_shape_class_densities():
    frame = shape_class_densities(6)
    assert frame['classes'].tolist() == [2, 4, 6, 12]
    assert frame['product_set'].all()
    assert frame['density'].sum() == pytest.approx(float(symbolic_density(6, 24)))
    quartic = shape_class_densities(4)
    assert '12/pi^4' in quartic['symbolic'].tolist()


def test_convergence_table():
    frame = convergence_table(4, 8, 1, [10**3, 10**4, 10**5])
    assert frame['X'].tolist() == [10**3, 10**4, 10**5]
    assert (frame['relative_error'] < 0.1).all()


def test_rp_distribution_exact():
    dist = rp_distribution_exact(3, 1)
    assert dist.units == 6
    assert dist.counts == ((1, 6), (2, 2))
    assert dist.law_holds
    assert dist.capped == (1, 8)
    assert dist.probabilities == {0: Fraction(2, 3), 1: Fraction(1, 3)}
    for p in (3, 5, 7, 11, 13):
        for e in (1, 2, 3):
            assert rp_distribution_exact(p, e).law_holds
    assert rp_distribution_exact(2, 2).law_holds is None
    with pytest.raises(SizeBudgetError):
        rp_distribution_exact(13, 3, budget=1000)
    with pytest.raises(DomainError):
        rp_distribution_exact(4, 1)


def test_wieferich_split():
    r0, r_ge1 = wieferich_split(5)
    assert (r0, r_ge1) == (Fraction(4, 5), Fraction(1, 5))
    split = wieferich_split(2)
    assert split.empirical
    assert tuple(split) == (Fraction(1, 2), Fraction(1, 2))
    assert not wieferich_split(7, e=2).empirical

