"""Rectangular numeric tables with a stable CSV rendering."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError

__all__ = ["CsvTable"]


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".17g")


@dataclass(frozen=True)
class CsvTable:
    """Column names plus rows of finite numbers; integers stay integers."""

    header: tuple
    rows: tuple

    def __post_init__(self):
        header = tuple(str(h) for h in self.header)
        rows = tuple(tuple(r) for r in self.rows)
        for i, r in enumerate(rows):
            if len(r) != len(header):
                raise DomainError(f"row {i} has {len(r)} fields, header has {len(header)}")
            for v in r:
                if not isinstance(v, (int, np.integer)) and not math.isfinite(float(v)):
                    raise DomainError(f"row {i} holds a non-finite value")
        object.__setattr__(self, "header", header)
        object.__setattr__(self, "rows", rows)

    def column(self, name: str) -> np.ndarray:
        j = self.header.index(name)
        return np.array([r[j] for r in self.rows], dtype=float)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(self.header)
        for r in self.rows:
            w.writerow([_fmt(v) for v in r])
        return buf.getvalue()

    def write(self, path: str | Path) -> None:
        Path(path).write_bytes(self.to_csv().encode("utf-8"))

    @classmethod
    def read(cls, path: str | Path) -> "CsvTable":
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
        parse = lambda s: int(s) if s.lstrip("-").isdigit() else float(s)
        return cls(tuple(rows[0]), tuple(tuple(parse(v) for v in r) for r in rows[1:]))
