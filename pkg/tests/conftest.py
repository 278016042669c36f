# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Shared fixtures: lookup tables are expensive enough to build once per session."""

from __future__ import annotations

import pytest
from click.testing import CliRunner

from pureshape.table import build_table


@pytest.fixture(scope='session')
def quartic_table():
    return build_table(4)


@pytest.fixture(scope='session')
def sextic_table():
    return build_table(6)


@pytest.fixture(scope='session')
def nonic_table():
    return build_table(9)


@pytest.fixture(scope='session')
def tables():
    # Degrees used by the periodicity and table agreement sweeps
    return {n: build_table(n) for n in (4, 6, 8, 9, 10, 12)}


@pytest.fixture()
def runner():
    return CliRunner()
