# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Unit tests for the helper functions within pureshape"""

import logging

import pytest

from pureshape.exceptions import UserConfigError
from pureshape.helpers import (
    DEFAULT_SIEVE_MEMORY_MB,
    SIEVE_MEMORY_ENV_VAR,
    _on_demand_import,
    _round_real,
    _sieve_memory_budget,
    configure_logger,
    logger,
)


def test_sieve_memory_budget(monkeypatch):
    monkeypatch.delenv(SIEVE_MEMORY_ENV_VAR, raising=False)
    assert _sieve_memory_budget() == DEFAULT_SIEVE_MEMORY_MB * 2**20
    assert _sieve_memory_budget(1) == 2**20
    # The environment variable is only consulted when no explicit budget is passed
    monkeypatch.setenv(SIEVE_MEMORY_ENV_VAR, '3')
    assert _sieve_memory_budget() == 3 * 2**20
    assert _sieve_memory_budget(2) == 2 * 2**20
    monkeypatch.setenv(SIEVE_MEMORY_ENV_VAR, 'lots')
    with pytest.raises(UserConfigError):
        _sieve_memory_budget()
    with pytest.raises(UserConfigError):
        _sieve_memory_budget(0)


def test_round_real():
    assert _round_real(0.1231820424937582739) == 0.123182042493758
    assert _round_real(123456.7890123456789, 6) == 123457.0
    assert _round_real(0.0) == 0.0


def test_configure_logger():
    original = list(logger.handlers)
    configure_logger(logging_level=logging.WARNING)
    assert logger.level == logging.WARNING
    assert all(h.level == logging.WARNING for h in logger.handlers)
    configure_logger(logging_level=logging.DEBUG)
    assert logger.level == logging.DEBUG
    # Swapping the stream handler keeps exactly one of them
    handler = logging.StreamHandler()
    configure_logger(stream_handler=handler)
    assert handler in logger.handlers
    assert sum(isinstance(h, logging.StreamHandler) for h in logger.handlers) == 1
    configure_logger(stream_handler=original[0])
    configure_logger(logging_level=logging.INFO)
    logger.setLevel(logging.DEBUG)


def test_on_demand_import():
    json_mod = _on_demand_import('json')
    assert json_mod.dumps([1]) == '[1]'
    missing = _on_demand_import('surely_not_an_installed_module', 'not-a-package')
    with pytest.raises(ImportError, match='not-a-package'):
        missing.anything
