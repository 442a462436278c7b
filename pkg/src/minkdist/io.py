"""JSON/CSV file formats. Every rational is written as a literal string."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .core import PlanePoint, format_rational, parse_rational
from .minkowski import PointSet
from .sumproduct import RealSet


def pointset_to_json(P: PointSet) -> list[list[str]]:
    return [[format_rational(p.x1), format_rational(p.x2)] for p in P]


def pointset_from_json(data) -> PointSet:
    if not isinstance(data, list) or not all(isinstance(r, list) and len(r) == 2 for r in data):
        raise ValueError("point set must be a JSON array of two-element arrays")
    pts = [PlanePoint.of(a, b) for a, b in data]
    seen = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise ValueError(f"duplicate point {data[i]} at index {i} (first seen at index {seen[p]})")
        seen[p] = i
    return PointSet(tuple(pts))


def realset_to_json(A: RealSet) -> list[str]:
    return [format_rational(a) for a in A]


def realset_from_json(data) -> RealSet:
    if not isinstance(data, list):
        raise ValueError("real set must be a JSON array of rational literals")
    return RealSet.of(data)


def load_json(path) -> object:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def load_pointset(path) -> PointSet:
    return pointset_from_json(load_json(path))


def load_realset(path) -> RealSet:
    return realset_from_json(load_json(path))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="")


def rows_to_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({c: r.get(c, "") for c in columns})
    return buf.getvalue()
