"""Canonical JSON and CSV rendering of reports."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, is_dataclass

# largest integer every JSON consumer reads back exactly
MAX_SAFE_INT = 2**53

SCALAR_FIELDS = (
    "n", "m", "k", "r_m", "r_bar", "count_L", "count_Q", "countH_L", "countH_Q",
    "countN_L", "countN_Q", "odd_colorable", "odd_bipartite", "composition_length",
    "even_bipartitions", "odd_bipartitions",
)


def to_jsonable(obj):
    """Recursively convert dataclasses/tuples and stringify integers above 2^53."""
    if is_dataclass(obj) and not isinstance(obj, type):
        obj = asdict(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > MAX_SAFE_INT else obj
    if hasattr(obj, "item"):  # numpy scalars
        return to_jsonable(obj.item())
    return obj


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_rows_csv(rows: list[dict]) -> str:
    """One CSV line per component; list fields are space separated."""
    header = ["component", "vertices", *SCALAR_FIELDS, "divisors", "module_structure"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        rep = row["report"] or {}
        writer.writerow(
            [row["component"], " ".join(map(str, row["vertices"]))]
            + ["" if rep.get(f) is None else rep[f] for f in SCALAR_FIELDS]
            + [" ".join(map(str, rep.get("divisors", ()))),
               " ".join(map(str, rep.get("module_structure", ())))]
        )
    return buf.getvalue()
