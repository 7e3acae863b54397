#!/usr/bin/env python3
"""
Output Formatters

Renders command results as JSON-lines, CSV or an aligned text table.
Rationals are written "p/q" with integers bare; in CSV integers are bare
numeric cells and every other rational is a quoted string.
"""

import csv
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, TextIO

from dowling.core.exact import format_rational


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


def text(value: Any) -> str:
    """A value as it appears in JSON and table output."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def csv_cell(value: Any) -> Any:
    # Integral values stay numeric so QUOTE_NONNUMERIC leaves them bare
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else format_rational(value)
    if isinstance(value, bool):
        return text(value)
    return value


def json_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    if isinstance(value, dict):
        return {k: json_value(v) for k, v in value.items()}
    return value


def write_json(out: TextIO, obj: Any) -> None:
    out.write(json.dumps(json_value(obj)) + "\n")


def write_rows(out: TextIO, fmt: OutputFormat, columns: Sequence[str],
               rows: Iterable[Dict[str, Any]]) -> None:
    """
    Writes records in the requested format.

    json: one JSON object per line. csv: a header line, then one line per
    record. table: space-aligned columns with a header.
    """
    fmt = OutputFormat(fmt)
    rows = list(rows)
    if fmt is OutputFormat.JSON:
        for row in rows:
            write_json(out, {c: row[c] for c in columns})
        return
    if fmt is OutputFormat.CSV:
        out.write(",".join(columns) + "\n")
        writer = csv.writer(out, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        for row in rows:
            writer.writerow([csv_cell(row[c]) for c in columns])
        return
    cells: List[List[str]] = [list(columns)] + [[text(row[c]) for c in columns] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    for line in cells:
        out.write("  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip() + "\n")
