"""Rectangular result tables and their CSV form.

CSV uses LF line endings and repr() floats (shortest round-trip decimals),
so identical runs produce byte-identical files and re-parsing recovers the
exact values.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[list] = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.columns)) != len(self.columns):
            raise ValueError("column names must be unique")

    def append(self, values) -> None:
        values = list(values)
        if len(values) != len(self.columns):
            raise ValueError(
                f"row has {len(values)} values for {len(self.columns)} columns"
            )
        self.rows.append(values)

    def append_dict(self, mapping) -> None:
        self.append([mapping[c] for c in self.columns])

    def column(self, name: str) -> list:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def numeric(self, name: str) -> np.ndarray:
        return np.asarray(self.column(name), dtype=np.float64)

    def __len__(self) -> int:
        return len(self.rows)


def _format(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _write_rows(table: ResultTable, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_format(v) for v in row])


def write_csv(table: ResultTable, path_or_file) -> None:
    if hasattr(path_or_file, "write"):
        _write_rows(table, path_or_file)
        return
    with open(path_or_file, "w", encoding="utf-8", newline="") as fh:
        _write_rows(table, fh)


def _parse(token: str):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        return token


def read_csv(path) -> ResultTable:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        table = ResultTable(columns=header)
        for row in reader:
            table.append([_parse(tok) for tok in row])
    return table
