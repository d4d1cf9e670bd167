"""Report documents and their JSON / CSV / table renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__


@dataclass
class ReportDocument:
    command: str
    type: str | None
    rows: list
    warnings: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    timing: float | None = None
    table_lines: list | None = None

    def metadata(self) -> dict:
        meta = {"tool": "wonderkit", "version": __version__, "command": self.command,
                "type": self.type}
        meta.update(self.extra)
        if self.timing is not None:
            meta["timing_seconds"] = round(self.timing, 6)
        return meta

    def to_json_obj(self) -> dict:
        return {"metadata": self.metadata(), "rows": self.rows, "warnings": self.warnings}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        obj = json.loads(text)
        meta = dict(obj["metadata"])
        timing = meta.pop("timing_seconds", None)
        command = meta.pop("command")
        type_ = meta.pop("type")
        for k in ("tool", "version"):
            meta.pop(k, None)
        return cls(command, type_, obj["rows"], obj["warnings"], meta, timing)

    def to_csv(self) -> str:
        cols = []
        for r in self.rows:
            for k in r:
                if k not in cols:
                    cols.append(k)
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\r\n")
        wr.writerow(cols)
        for r in self.rows:
            wr.writerow([_cell(r.get(c)) for c in cols])
        return buf.getvalue()

    def to_table(self) -> str:
        if self.table_lines is not None:
            lines = list(self.table_lines)
        else:
            lines = _aligned(self.rows)
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def _aligned(rows) -> list:
    if not rows:
        return ["(no rows)"]
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for row in cells:
        out.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return out
