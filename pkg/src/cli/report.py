"""
Run reports: one object per command, rendered as JSON or as text tables.

Both renderings come from the same `to_json()` payload, so they carry the
same numbers. Wall time is only included when it was measured (--timing).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from src.utils.io import dumps

FORMATS = ("text", "json")


def _is_scalar(value: Any) -> bool:
    return value is None or isinstance(value, (bool, int, float, str))


def _is_cell(value: Any) -> bool:
    return _is_scalar(value) or (isinstance(value, list) and all(_is_scalar(v) for v in value))


def _table(value: Any) -> str | None:
    """Tabular rendering for flat lists and mappings; None when not flat."""
    if isinstance(value, dict) and value and all(_is_scalar(v) for v in value.values()):
        return pd.Series(value, dtype=object).to_string()
    if isinstance(value, list) and value and all(_is_scalar(v) for v in value):
        return pd.Series(value, dtype=object).to_string()
    if (
        isinstance(value, list)
        and value
        and all(isinstance(row, dict) and all(_is_cell(v) for v in row.values()) for row in value)
    ):
        return pd.DataFrame(value).to_string(index=False)
    return None


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    wall_time: float | None = None

    def check(self, name: str, ok: bool) -> bool:
        """Record a named check; a repeated name must pass every time."""
        self.checks[name] = bool(ok) and self.checks.get(name, True)
        return bool(ok)

    @property
    def verified(self) -> bool:
        return all(self.checks.values())

    @property
    def exit_code(self) -> int:
        return 0 if self.verified else 1

    def to_json(self) -> dict[str, Any]:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": self.checks,
            "verified": self.verified,
        }
        if self.wall_time is not None:
            payload["wallTime"] = self.wall_time
        return payload

    def to_text(self) -> str:
        payload = self.to_json()
        lines = [f"command: {self.command}"]
        lines.extend(f"  {key} = {value}" for key, value in sorted(self.inputs.items()))
        for key, value in sorted(self.results.items()):
            lines.append("")
            lines.append(f"[{key}]")
            table = _table(value)
            lines.append(table if table is not None else json.dumps(value, sort_keys=True))
        if self.checks:
            lines.append("")
            lines.append("[checks]")
            frame = pd.DataFrame(
                {"check": list(self.checks), "passed": list(self.checks.values())}
            )
            lines.append(frame.to_string(index=False))
        lines.append("")
        lines.append(f"verified: {payload['verified']}")
        if self.wall_time is not None:
            lines.append(f"wall time: {self.wall_time:.3f} s")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            return dumps(self.to_json())
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"Unknown format {fmt!r}; choose from {FORMATS}")
