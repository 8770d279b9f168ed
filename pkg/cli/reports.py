"""Serialization of command reports.

JSON floats use Python's shortest round-trip representation; CSV and mesh
files use 17 significant digits. Both are exact and deterministic.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

import config


def format_value(value) -> str:
    """CSV cell text: 17 significant digits for floats, empty for None."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{config.SIGNIFICANT_DIGITS}g}"
    return str(value)


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def emit(text: str, out: Optional[Path] = None) -> None:
    """Write a report to the given file, or to standard output."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(out).write_text(text)
