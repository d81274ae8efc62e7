"""Report documents: aligned human tables and a line-delimited JSON format.

Machine format, one JSON object per line:

* first line ``{"kind": "meta", "command", "spec", "caps", "timestamp", "format"}``
* then one record per row with exactly the fields
  ``kind, ring, flag_or_check, status, witness, nanos``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

ROW_FIELDS = ("kind", "ring", "flag_or_check", "status", "witness", "nanos")
FORMATS = ("human", "machine")


def _jsonable(value):
    """Normalize tuples, numpy scalars and dict keys so that a JSON round trip is exact."""
    return json.loads(json.dumps(value, default=_default))


def _default(value):
    if hasattr(value, "item"):
        return value.item()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass(frozen=True)
class Row:
    kind: str
    ring: str
    flag_or_check: str
    status: str
    witness: object = None
    nanos: int = 0

    def __post_init__(self):
        object.__setattr__(self, "witness", _jsonable(self.witness))
        object.__setattr__(self, "nanos", int(self.nanos))


@dataclass
class ReportDocument:
    command: str
    spec: str = ""
    caps: dict = field(default_factory=dict)
    timestamp: str = ""
    format: str = "human"
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        self.caps = _jsonable(self.caps)

    def add(self, *args, **kwargs):
        self.rows.append(Row(*args, **kwargs))

    def statuses(self):
        return [r.status for r in self.rows]

    def render(self, fmt=None):
        fmt = fmt or self.format
        if fmt == "machine":
            return emit_machine(self)
        if fmt == "human":
            return emit_human(self)
        raise ValueError(f"unknown format {fmt!r}")


def emit_machine(doc):
    meta = {"kind": "meta", "command": doc.command, "spec": doc.spec, "caps": doc.caps,
            "timestamp": doc.timestamp, "format": doc.format, "notes": list(doc.notes)}
    lines = [json.dumps(meta, sort_keys=True)]
    lines += [json.dumps(asdict(r), sort_keys=True) for r in doc.rows]
    return "\n".join(lines) + "\n"


def parse_machine(text):
    """Inverse of :func:`emit_machine`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty report")
    meta = json.loads(lines[0])
    if meta.get("kind") != "meta":
        raise ValueError("first record must be the meta record")
    rows = []
    for ln in lines[1:]:
        rec = json.loads(ln)
        if set(rec) != set(ROW_FIELDS):
            raise ValueError(f"row has fields {sorted(rec)}")
        rows.append(Row(**rec))
    return ReportDocument(meta["command"], meta["spec"], meta["caps"], meta["timestamp"],
                          meta["format"], rows, list(meta.get("notes", [])))


def _cell(value):
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return ", ".join(f"{k}={_cell(v)}" for k, v in value.items() if v is not None)
    if isinstance(value, list):
        return "(" + ", ".join(_cell(v) for v in value) + ")"
    return str(value)


def emit_human(doc):
    header = f"# {doc.command}" + (f" {doc.spec}" if doc.spec else "")
    cols = ("kind", "ring", "flag/check", "status", "witness")
    table = [cols] + [(r.kind, r.ring, r.flag_or_check, r.status, _cell(r.witness)) for r in doc.rows]
    widths = [max(len(row[k]) for row in table) for k in range(len(cols) - 1)]
    lines = [header]
    for row in table:
        lead = "  ".join(cell.ljust(w) for cell, w in zip(row, widths))
        lines.append(f"{lead}  {row[-1]}".rstrip())
    lines += [f"note: {n}" for n in doc.notes]
    return "\n".join(lines) + "\n"
