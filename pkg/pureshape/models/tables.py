# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""The residue class lookup table of integral basis shapes, and its serialized record format"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

import pandas as pd

from pureshape.exceptions import UserConfigError
from pureshape.models.shapes import BetaReduction, GlobalShape, LocalShape

__all__ = ['EntryStatus', 'TableEntry', 'ShapeTable']


class EntryStatus(str, Enum):
    SHAPE = 'shape'
    H_CONDITIONAL = 'h_conditional'
    EXCLUDED = 'excluded'


@dataclass(frozen=True)
class TableEntry:
    """
    One residue class of the table

    Attributes
    ----------
    status: EntryStatus
        SHAPE when every H-satisfying member has the stored shape, H_CONDITIONAL when the class fixes the shape only
        for members satisfying H (some p^(e_p + 1) divides the class), EXCLUDED when no member satisfies H
    shape: GlobalShape or LocalShape or None
        The shape of the class, None for excluded classes; local tables store LocalShape entries
    reason: str
        Why a class is excluded or conditional, empty for plain shape entries
    """

    status: EntryStatus
    shape: GlobalShape | LocalShape | None = None
    reason: str = ''


def _local_from_dict(record: dict) -> LocalShape:
    beta = None
    if 'beta' in record:
        beta = tuple(BetaReduction(b['m'], b['modulus'], tuple(b['coeffs'])) for b in record['beta'])
    return LocalShape(record['p'], record['e'], record['d'], tuple(record['k']), record['ramified'], beta)


@dataclass
class ShapeTable:
    """
    The lookup table T(n): for each residue a mod M(n), the global shape of every H-satisfying radicand in the class

    Attributes
    ----------
    n: int
        The degree
    M: int
        The modulus M(n) = prod p^(e_p + 1)
    entries: dict of TableEntry
        Maps every residue in [0, M) to its entry
    local_tables: dict
        Maps each prime p dividing n to its local table, a dict from residues mod p^(e_p + 1) to TableEntry
    """

    n: int
    M: int
    entries: dict[int, TableEntry]
    local_tables: dict[int, dict[int, TableEntry]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, a: int) -> TableEntry:
        """Read the entry of the class of a; negative radicands are reduced into [0, M)."""
        return self.entries[a % self.M]

    def to_records(self) -> list[dict]:
        records = []
        for residue in sorted(self.entries):
            entry = self.entries[residue]
            record = {'n': self.n, 'class': residue, 'status': entry.status.value}
            record['primes'] = [ls.to_dict() for ls in entry.shape.locals] if entry.shape is not None else []
            if entry.reason:
                record['reason'] = entry.reason
            records.append(record)
        return records

    def to_frame(self) -> pd.DataFrame:
        """Flatten the table into one row per class with a d and a k column per prime."""
        rows = []
        for residue in sorted(self.entries):
            entry = self.entries[residue]
            row = {'class': residue, 'status': entry.status.value}
            if entry.shape is not None:
                for ls in entry.shape.locals:
                    row[f'd_{ls.p}'] = ls.d_p
                    row[f'k_{ls.p}'] = ''.join(str(k) for k in ls.k) if max(ls.k) < 10 else str(ls.k)
            row['reason'] = entry.reason
            rows.append(row)
        return pd.DataFrame(rows)

    def export_jsonl(self, file: str = None) -> None | str:
        """
        Serialize the table as one JSON object per line and per residue class

        Parameters
        ----------
        file: str, optional
            The path and file (absolute or relative to CWD) to save the table to, if not provided the text is returned

        Returns
        -------
        None or str
            No return value if saving to file, otherwise the JSON lines text
        """
        text = ''.join(json.dumps(record, sort_keys=False) + '\n' for record in self.to_records())
        if file:
            with open(file, 'w') as f:
                f.write(text)
            return None
        return text

    @classmethod
    def from_jsonl(cls, file: str) -> ShapeTable:
        try:
            with open(file) as f:
                records = [json.loads(line) for line in f if line.strip()]
        except FileNotFoundError as e:
            msg = f'Could not find the requested table file {file}, the file does not appear to exist.'
            raise FileNotFoundError(msg) from e
        except json.JSONDecodeError as e:
            raise UserConfigError(f'Table file {file} holds a line that is not valid JSON: {e.msg}.') from e
        if not records:
            raise UserConfigError(f'Table file {file} contains no records.')
        try:
            n = records[0]['n']
            entries = {}
            for record in records:
                status = EntryStatus(record['status'])
                shape = None
                if record['primes']:
                    shape = GlobalShape(n, tuple(_local_from_dict(r) for r in record['primes']))
                entries[record['class']] = TableEntry(status, shape, record.get('reason', ''))
        except (KeyError, ValueError, TypeError) as e:
            raise UserConfigError(f'Table file {file} holds a malformed record: {e!r}.') from e
        M = 1
        for ls in next(e.shape for e in entries.values() if e.shape is not None).locals:
            M *= ls.p ** (ls.e_p + 1)
        if len(entries) != M:
            raise UserConfigError(f'Table file {file} has {len(entries)} records but M({n}) = {M}.')
        return cls(n, M, entries)
