# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Tests for the lookup table construction and the period, sharpness and minimality checks"""

from collections import Counter

import pytest

from pureshape.exceptions import DomainError, UserConfigError
from pureshape.models.tables import EntryStatus
from pureshape.shape import global_shape
from pureshape.table import *


def _status_counts(table):
    return Counter(entry.status for entry in table.entries.values())


def test_build_table_sizes(tables):
    assert {n: len(t) for n, t in tables.items()} == {4: 8, 6: 36, 8: 16, 9: 27, 10: 100, 12: 72}
    for n, table in tables.items():
        assert sorted(table.entries) == list(range(table.M))


def test_build_table_statuses(quartic_table, sextic_table, nonic_table, tables):
    expected = {EntryStatus.SHAPE: 6, EntryStatus.H_CONDITIONAL: 1, EntryStatus.EXCLUDED: 1}
    assert _status_counts(quartic_table) == expected
    # 4 | a or 9 | a leaves v_p(a) to Hypothesis H, no class is excluded outright
    assert _status_counts(sextic_table) == {EntryStatus.SHAPE: 24, EntryStatus.H_CONDITIONAL: 12}
    assert _status_counts(nonic_table) == {EntryStatus.SHAPE: 26, EntryStatus.H_CONDITIONAL: 1}
    octic = tables[8]
    assert octic.lookup(4).status is EntryStatus.EXCLUDED
    assert octic.lookup(12).status is EntryStatus.EXCLUDED
    assert octic.lookup(8).status is EntryStatus.SHAPE
    assert octic.lookup(8).shape.locals[0].ramified


def test_build_table_conditional_entries(quartic_table):
    entry = quartic_table.lookup(0)
    assert entry.status is EntryStatus.H_CONDITIONAL
    assert entry.shape.locals[0].ramified
    assert '2^3' in entry.reason
    assert entry.shape == global_shape(24, 4)
    assert entry.shape == global_shape(-8, 4)


def test_build_table_degree_range():
    with pytest.raises(UserConfigError):
        build_table(2)
    with pytest.raises(UserConfigError):
        build_table(61)
    with pytest.raises(UserConfigError):
        build_table(12, max_degree=10)
    assert len(build_table(5, verify_samples=0)) == 25


def test_verify_period(quartic_table, sextic_table):
    report = verify_period(4, 300, table=quartic_table)
    assert report.passed
    assert report.classes_checked == 7
    assert report.members_checked > 2 * 200
    assert verify_period(6, 500, table=sextic_table).passed
    assert verify_period(3, 100).passed
    with pytest.raises(DomainError):
        verify_period(6, 20)


def test_find_sharpness_witness():
    witness = find_sharpness_witness(4, 2)
    assert (witness.a, witness.a_prime) == (5, 9)
    assert (witness.d, witness.d_prime) == (1, 2)
    assert witness.congruence_level == witness.e_p == 2
    assert witness.first_differing_m is not None

    witness = find_sharpness_witness(6, 3)
    assert (witness.a, witness.a_prime) == (7, 10)
    assert (witness.d, witness.d_prime) == (0, 1)
    assert witness.congruence_level == 1

    assert (find_sharpness_witness(9, 3).a, find_sharpness_witness(9, 3).a_prime) == (10, 28)
    assert (find_sharpness_witness(6, 2).a, find_sharpness_witness(6, 2).a_prime) == (3, 5)
    with pytest.raises(DomainError):
        find_sharpness_witness(9, 2)


def test_verify_minimality():
    report = verify_minimality(4, 100)
    assert report.passed
    N, a, a_prime, diffs = report.refutations[2]
    assert (N, a, a_prime) == (4, 5, 1)
    assert (2, 'd_p') in diffs

    report = verify_minimality(6, 200)
    assert report.passed
    assert sorted(report.refutations) == [2, 3]
    assert report.refutations[3][:3] == (12, 25, 1)
    for p, (N, a, a_prime, _) in report.refutations.items():
        assert N == report.M // p
        assert (a - a_prime) % N == 0
    with pytest.raises(DomainError):
        verify_minimality(6, 30)
