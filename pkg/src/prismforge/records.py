"""Newline-delimited JSON records and atomic checkpoint files.

Field order of a record line is fixed (see RECORD_FIELDS).  Rationals are
written as "p/q" strings, integers as bare numbers, absent lengths as null.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Iterable, Optional

from . import __version__
from .search import Checkpoint, SearchBounds, SearchRecord
from .shapes import LENGTH_NAMES, PrismCandidate, Shape, candidate, classify

RECORD_FIELDS = ("shape", "lengths", "h", "params", "square_conditions", "square_count",
                 "required_count", "perfect", "geometry_status", "measure", "strategy", "bounds",
                 "tool_version")


def enc(q):
    if q is None:
        return None
    if isinstance(q, bool):
        return q
    if isinstance(q, int):
        return q
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if isinstance(q, (tuple, list)):
        return [enc(t) for t in q]
    return q


def dec(v):
    if v is None:
        return None
    if isinstance(v, list):
        return tuple(dec(t) for t in v)
    if isinstance(v, int):
        return Fraction(v)
    return Fraction(v)


def record_to_dict(rec: SearchRecord, bounds: Optional[SearchBounds] = None) -> dict:
    base = rec.candidate.base
    d = {
        "shape": base.kind.value,
        "lengths": {n: enc(getattr(base, n)) for n in LENGTH_NAMES},
        "h": enc(rec.candidate.h),
        "params": enc(tuple(rec.params)),
        "square_conditions": rec.report.squares,
        "square_count": rec.report.square_count,
        "required_count": rec.report.required_count,
        "perfect": rec.report.perfect,
        "geometry_status": base.geometry_status,
        "measure": rec.measure,
        "strategy": rec.strategy,
        "bounds": bounds.to_dict() if bounds is not None else None,
        "tool_version": __version__,
    }
    return {k: d[k] for k in RECORD_FIELDS}


def dumps(rec: SearchRecord, bounds: Optional[SearchBounds] = None) -> str:
    return json.dumps(record_to_dict(rec, bounds), separators=(",", ":"))


def candidate_from_dict(d: dict) -> PrismCandidate:
    lengths = {n: dec(v) for n, v in d["lengths"].items() if v is not None}
    return candidate(Shape(d["shape"]), lengths, dec(d["h"]))


def verify_dict(d: dict) -> list:
    """Problems found when the stored report is recomputed; empty means clean."""
    problems = []
    try:
        c = candidate_from_dict(d)
    except (KeyError, ValueError, ZeroDivisionError, TypeError) as exc:
        return [f"unreadable candidate: {exc}"]
    rep = classify(c)
    checks = (("square_conditions", rep.squares), ("square_count", rep.square_count),
              ("required_count", rep.required_count), ("perfect", rep.perfect),
              ("geometry_status", c.base.geometry_status))
    for key, value in checks:
        if d.get(key) != value:
            problems.append(f"{key}: stored {d.get(key)!r}, recomputed {value!r}")
    total = sum(t for t in c.base.lengths().values()) + c.h
    if d.get("measure") != total:
        problems.append(f"measure: stored {d.get('measure')!r}, recomputed {total}")
    return problems


def read_lines(path: str) -> list:
    if not os.path.exists(path):
        return []
    with open(path) as fh:
        return [line for line in fh.read().splitlines() if line.strip()]


def record_key_of_dict(d: dict) -> tuple:
    from .search import record_key
    return record_key(candidate_from_dict(d))


class RecordSink:
    """Append-only record file; each record is one write of one full line."""

    def __init__(self, path: str, bounds: Optional[SearchBounds] = None):
        self.path = path
        self.bounds = bounds
        self.count = 0

    def write(self, records: Iterable[SearchRecord]) -> int:
        lines = [dumps(r, self.bounds) + "\n" for r in records]
        if not lines:
            return 0
        with open(self.path, "a") as fh:
            for line in lines:
                fh.write(line)
            fh.flush()
            os.fsync(fh.fileno())
        self.count += len(lines)
        return len(lines)


def write_checkpoint(path: str, ck: Checkpoint, output: str):
    payload = {"strategy": ck.strategy, "bounds": ck.bounds.to_dict(), "cursor": ck.cursor,
               "emitted_count": ck.emitted_count, "output": output, "tool_version": __version__}
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".ckpt-")
    with os.fdopen(fd, "w") as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def read_checkpoint(path: str) -> tuple:
    with open(path) as fh:
        d = json.load(fh)
    ck = Checkpoint(d["strategy"], SearchBounds.from_dict(d["bounds"]), d["cursor"],
                    d["emitted_count"])
    return ck, d.get("output")
