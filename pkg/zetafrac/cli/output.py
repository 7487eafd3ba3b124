"""Rendering of records to stdout. Progress and errors go through the logger to stderr."""
from __future__ import annotations

import csv
import json
import sys
from enum import Enum
from typing import IO, Iterable

from zetafrac.arith.bigratio import int_text
from zetafrac.jobs.schemas import ScanRecord, ScanSummary
from zetafrac.theorems.schemas import Verdict, VerdictRecord

VERDICT_COLUMNS = ("n", "s", "x", "claim-id", "verdict", "k", "m", "floor_lhs", "floor_pow", "lo", "hi", "contract", "note")
SCAN_COLUMNS = ("n", "frac", "below_threshold", "mahler_margin")


def _csv_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return int_text(value)
    if isinstance(value, Enum):
        return value.value
    return "" if value is None else value


def render_verdict_text(record: VerdictRecord) -> str:
    subject = f"n={record.n}" if record.n is not None else f"s={record.s}"
    if record.x is not None:
        subject += f" x={record.x}"
    parts = [record.claim_id, subject, record.verdict.value]
    if record.k is not None:
        parts.append(f"k={record.k}")
    if record.m is not None:
        parts.append(f"m={record.m}")
    if record.floor_lhs is not None:
        parts.append(f"floor_lhs={int_text(record.floor_lhs)}")
    if record.floor_pow is not None:
        parts.append(f"floor_pow={int_text(record.floor_pow)}")
    if record.lo is not None:
        parts.append(f"[{record.lo}, {record.hi}]")
    if record.contract != "exact":
        parts.append(f"({record.contract} contract)")
    if record.note:
        parts.append(f"# {record.note}")
    return " ".join(parts)


class VerdictWriter:
    def __init__(self, fmt: str, out: IO[str] | None = None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self._csv = None
        self.verdicts: list[Verdict] = []

    def write(self, record: VerdictRecord) -> None:
        self.verdicts.append(record.verdict)
        if self.fmt == "json":
            print(record.to_json(), file=self.out)
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.DictWriter(self.out, fieldnames=VERDICT_COLUMNS, lineterminator="\n")
                self._csv.writeheader()
            row = record.model_dump(by_alias=True)
            self._csv.writerow({col: _csv_value(row.get(col)) for col in VERDICT_COLUMNS})
        else:
            print(render_verdict_text(record), file=self.out)
        self.out.flush()

    def write_all(self, records: Iterable[VerdictRecord]) -> None:
        for record in records:
            self.write(record)


class ScanWriter:
    """JSON lines, or CSV (also the text format) with the summary sent to a side channel."""

    def __init__(self, fmt: str, out: IO[str] | None = None, summary_path: str | None = None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self.summary_path = summary_path
        self._csv = None

    def write(self, item: ScanRecord | ScanSummary) -> None:
        if isinstance(item, ScanSummary):
            self._write_summary(item)
            return
        row = item.to_row()
        if self.fmt == "json":
            print(json.dumps(row), file=self.out)
        else:
            if self._csv is None:
                self._csv = csv.DictWriter(self.out, fieldnames=SCAN_COLUMNS, lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow({col: _csv_value(row[col]) for col in SCAN_COLUMNS})

    def _write_summary(self, summary: ScanSummary) -> None:
        text = summary.model_dump_json()
        if self.summary_path:
            with open(self.summary_path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        elif self.fmt == "json":
            print(text, file=self.out)
        else:
            print(text, file=sys.stderr)
        self.out.flush()
