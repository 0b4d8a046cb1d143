"""Byte-stable JSON / CSV / plain-table output for command results."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

SCHEMA = "taqlab/1"
FORMATS = ("json", "csv", "table")

# preferred column order for basis rows; unknown keys follow alphabetically
_COLUMNS = ("degree", "free_rank", "torsion_rank", "sequence", "word", "kind", "name", "cutoff", "oracle", "rule")


@dataclass(frozen=True)
class Result:
    command: str
    p: int
    params: Mapping[str, Any]
    cutoff: int
    dims: Mapping[int, int]
    basis: Sequence[Mapping[str, Any]] = ()
    notes: Sequence[str] = ()
    extra: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        bad = [d for d in self.dims if abs(d) > self.cutoff]
        if bad:
            raise ValueError(f"degrees {bad} lie outside the cutoff {self.cutoff}")


def to_document(result: Result) -> dict:
    doc = {
        "schema": SCHEMA,
        "p": result.p,
        "command": result.command,
        "params": dict(result.params),
        "cutoff": result.cutoff,
        "dims": {str(d): r for d, r in sorted(result.dims.items()) if r},
        "basis": [dict(b) for b in result.basis],
        "notes": list(result.notes),
    }
    for k, v in result.extra.items():
        if k in doc:
            raise ValueError(f"extra field {k!r} collides with a schema field")
        doc[k] = v
    return doc


def _columns(rows: Sequence[Mapping[str, Any]]) -> list[str]:
    keys = set().union(*(r.keys() for r in rows)) if rows else set()
    cols = [c for c in _COLUMNS if c in keys]
    return cols + sorted(keys - set(cols))


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return str(v)


def _csv(result: Result) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree", "rank"])
    for d, r in sorted(result.dims.items()):
        if r:
            w.writerow([d, r])
    if result.basis:
        cols = _columns(result.basis)
        buf.write("\n")
        w.writerow(cols)
        for row in result.basis:
            w.writerow([_cell(row.get(c)) for c in cols])
    return buf.getvalue()


def _aligned(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]

    def fmt(cells: list[str]) -> str:
        # degree column right-aligned so signed degrees line up
        return "  ".join(c.rjust(w) if i == 0 else c.ljust(w) for i, (c, w) in enumerate(zip(cells, widths))).rstrip()

    return [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]


def _table(result: Result) -> str:
    params = " ".join(f"{k}={v}" for k, v in sorted(result.params.items()))
    lines = [f"{result.command}  p={result.p}  cutoff={result.cutoff}" + (f"  {params}" if params else ""), ""]
    dims = [[str(d), str(r)] for d, r in sorted(result.dims.items()) if r]
    lines += _aligned(["degree", "rank"], dims) if dims else ["(all ranks vanish through the cutoff)"]
    if result.basis:
        cols = _columns(result.basis)
        lines += [""] + _aligned(cols, [[_cell(b.get(c)) for c in cols] for b in result.basis])
    for k, v in sorted(result.extra.items()):
        lines += ["", f"{k}: {json.dumps(v, sort_keys=True)}"]
    for note in result.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def serialize(result: Result, fmt: str = "json") -> bytes:
    if fmt == "json":
        text = json.dumps(to_document(result), sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"
    elif fmt == "csv":
        text = _csv(result)
    elif fmt == "table":
        text = _table(result)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return text.encode("utf-8")
