"""Byte-stable JSON and CSV output for scan records and verification results."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import IO, Iterable

from .cde import ScanRecord
from .shapes import format_shape

CSV_COLUMNS = ["size", "shape", "ex_num", "ex_den", "ey_num", "ey_den", "cde", "classification", "conjecture_ok"]


def rational(x: Fraction) -> str:
    """Exact rationals travel as "num/den" strings ("3" for integers)."""
    return str(Fraction(x))


def _flag(b: bool) -> str:
    return "true" if b else "false"


def csv_row(rec: ScanRecord) -> list[str]:
    return [
        str(rec.size),
        format_shape(rec.shape),
        str(rec.e_x.numerator),
        str(rec.e_x.denominator),
        str(rec.e_y.numerator),
        str(rec.e_y.denominator),
        _flag(rec.cde),
        rec.classification,
        _flag(rec.conjecture_ok),
    ]


def json_record(rec: ScanRecord) -> dict:
    return {
        "size": rec.size,
        "shape": format_shape(rec.shape),
        "kind": rec.kind,
        "E_X": rational(rec.e_x),
        "E_Y": rational(rec.e_y),
        "cde": rec.cde,
        "classification": rec.classification,
        "conjecture_ok": rec.conjecture_ok,
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def emit_report(records: Iterable[ScanRecord], fmt: str, out: IO[str]) -> int:
    """Write scan records to ``out``; returns the number written.

    CSV rows are streamed as records arrive; JSON is one array.
    """
    n = 0
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rec in records:
            w.writerow(csv_row(rec))
            out.flush()
            n += 1
    elif fmt == "json":
        rows = [json_record(r) for r in records]
        n = len(rows)
        out.write(json.dumps(rows, sort_keys=True, indent=1))
        out.write("\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return n


def report_string(records: Iterable[ScanRecord], fmt: str) -> str:
    buf = io.StringIO()
    emit_report(records, fmt, buf)
    return buf.getvalue()
