"""Knot tables in CSV form and JSON reports."""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .cu import Report
from .diagram import PlanarDiagram, parse_pd

log = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("name", "pd_notation")


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd: str
    parsed: PlanarDiagram


def load_csv(path: str | Path) -> tuple[list[KnotRecord], int]:
    """Read a table with ``name`` and ``pd_notation`` columns.

    Rows whose PD code does not parse or validate are logged and skipped.
    Returns the records and the number of skipped rows.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = [c for c in REQUIRED_COLUMNS if c not in (reader.fieldnames or [])]
        if missing:
            raise KeyError(f"{path}: missing column(s) {', '.join(missing)}")
        records, skipped = [], 0
        for lineno, row in enumerate(reader, start=2):
            name, pd = row["name"].strip(), row["pd_notation"].strip()
            try:
                records.append(KnotRecord(name, pd, parse_pd(pd, name=name)))
            except ValueError as exc:
                log.warning("%s:%d: skipping %s: %s", path, lineno, name or "<unnamed>", exc)
                skipped += 1
    return records, skipped


def bundled_table() -> Path:
    return Path(str(resources.files("coloredknots") / "data" / "knots.csv"))


def report_dict(r: Report) -> dict:
    return {
        "name": r.name,
        "p": r.p,
        "determinant": r.determinant,
        "colorable": r.colorable,
        "classes": [{"labels": list(c.labels), "cu": c.cu} for c in r.classes],
        "cu_set": list(r.cu_set),
        "goeritz": [list(row) for row in r.goeritz],
        "representative_k": r.representative_k,
    }


def emit_json(r: Report) -> str:
    return json.dumps(report_dict(r))


def emit_text(r: Report) -> str:
    def fmt(values):
        return "{" + ", ".join(map(str, values)) + "}"

    lines = [
        f"knot: {r.name}",
        f"p: {r.p}",
        f"determinant: {r.determinant}",
        f"colorable: {'yes' if r.colorable else 'no'}",
        "goeritz: " + "; ".join(" ".join(f"{x:>3}" for x in row) for row in r.goeritz),
    ]
    for i, c in enumerate(r.classes, start=1):
        labels = " ".join(map(str, c.labels))
        lines.append(f"class {i}: labels [{labels}]  cu = {c.cu}  ~ #^{c.representative_k} T({r.p},2)")
    lines.append(f"cu_set: {fmt(r.cu_set)}")
    lines.append(f"mirror cu_set: {fmt(r.mirror_cu_set)}")
    if r.colorable:
        lines.append(
            f"note: cu separates {r.p} of the at most {2 * r.p} surgery classes of {r.p}-colored knots"
        )
    return "\n".join(lines)
