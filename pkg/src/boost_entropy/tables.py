"""CSV/JSON emitters for result tables.

Floats are written with 17 significant digits, which round-trips every
double exactly, so re-parsing and re-emitting a table reproduces it byte
for byte.
"""

from __future__ import annotations

import csv
import io
import json
import math

ENTROPY_PREFIX = "entropy"


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return repr(value)
        return f"{value:.17g}"
    return str(value)


def parse(text: str):
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def convert_units(rows: list[dict], unit: str) -> list[dict]:
    """Rescale entropy columns from nats to ``unit``."""
    if unit == "nats":
        return rows
    if unit != "bits":
        raise ValueError(f"unknown entropy unit {unit!r}")
    ln2 = math.log(2.0)
    return [{k: (v / ln2 if k.startswith(ENTROPY_PREFIX) and isinstance(v, float) else v)
             for k, v in row.items()} for row in rows]


def to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    if columns is None:
        columns = list(rows[0]) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(row[c]) for c in columns])
    return buf.getvalue()


def from_csv(text: str) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return [{k: parse(v) for k, v in zip(header, line)} for line in reader]


def _json_safe(value):
    if isinstance(value, float) and (math.isnan(value) or math.isinf(value)):
        return repr(value)
    return value


def to_json(params: dict, rows: list[dict], meta: dict) -> str:
    doc = {
        "params": {k: _json_safe(v) for k, v in params.items()},
        "rows": [{k: _json_safe(v) for k, v in row.items()} for row in rows],
        "meta": meta,
    }
    return json.dumps(doc, indent=2) + "\n"
