# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Tests for the lookup table container and its serialization"""

import json

import pytest

from pureshape.exceptions import UserConfigError
from pureshape.models.tables import *


def test_lookup_and_records(quartic_table):
    assert len(quartic_table) == 8
    # Negative radicands and radicands beyond M reduce into the table
    assert quartic_table.lookup(-7) is quartic_table.entries[1]
    assert quartic_table.lookup(17) is quartic_table.entries[1]
    records = quartic_table.to_records()
    assert [r['class'] for r in records] == list(range(8))
    assert records[4]['status'] == 'excluded' and records[4]['primes'] == []
    assert records[0]['status'] == 'h_conditional' and 'reason' in records[0]
    assert records[1]['primes'][0]['k'] == [0, 1, 2]
    assert records[1]['primes'][0]['beta'][2] == {'m': 3, 'modulus': 4, 'coeffs': [1, 1, 1]}


def test_to_frame(sextic_table):
    frame = sextic_table.to_frame()
    assert len(frame) == 36
    assert {'class', 'status', 'd_2', 'k_2', 'd_3', 'k_3', 'reason'} <= set(frame.columns)
    row = frame[frame['class'] == 1].iloc[0]
    assert row['k_2'] == '00111' and row['k_3'] == '00011'


def test_jsonl_round_trip(tmp_path, quartic_table, sextic_table):
    for tbl in (quartic_table, sextic_table):
        path = tmp_path / f'table_{tbl.n}.jsonl'
        tbl.export_jsonl(str(path))
        lines = path.read_text().splitlines()
        assert len(lines) == tbl.M
        assert json.loads(lines[0])['class'] == 0
        loaded = ShapeTable.from_jsonl(str(path))
        assert loaded.n == tbl.n and loaded.M == tbl.M
        assert loaded.entries == tbl.entries
    assert quartic_table.export_jsonl().count('\n') == 8


def test_from_jsonl_errors(tmp_path, quartic_table):
    with pytest.raises(FileNotFoundError):
        ShapeTable.from_jsonl(str(tmp_path / 'missing.jsonl'))
    empty = tmp_path / 'empty.jsonl'
    empty.write_text('')
    with pytest.raises(UserConfigError):
        ShapeTable.from_jsonl(str(empty))
    # Dropping a record leaves the table incomplete
    partial = tmp_path / 'partial.jsonl'
    partial.write_text(''.join(quartic_table.export_jsonl().splitlines(keepends=True)[1:]))
    with pytest.raises(UserConfigError):
        ShapeTable.from_jsonl(str(partial))
    lines = quartic_table.export_jsonl().splitlines(keepends=True)
    truncated = tmp_path / 'truncated.jsonl'
    truncated.write_text(''.join(lines[:-1]) + lines[-1][: len(lines[-1]) // 2] + '\n')
    with pytest.raises(UserConfigError, match='not valid JSON'):
        ShapeTable.from_jsonl(str(truncated))
    record = json.loads(lines[0])
    del record['status']
    missing_key = tmp_path / 'missing_key.jsonl'
    missing_key.write_text(json.dumps(record) + '\n' + ''.join(lines[1:]))
    with pytest.raises(UserConfigError, match='malformed record'):
        ShapeTable.from_jsonl(str(missing_key))


def test_entry_defaults():
    entry = TableEntry(EntryStatus.EXCLUDED)
    assert entry.shape is None and entry.reason == ''
    assert EntryStatus('shape') is EntryStatus.SHAPE
