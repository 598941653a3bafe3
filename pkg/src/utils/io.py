"""Byte-stable JSON encoding for reports and exports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any


def dumps(payload: Any) -> str:
    """Serialize with sorted keys and a trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_json(payload: Any, output: Path) -> Path:
    """Write payload to output, creating parent folders."""
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(dumps(payload), encoding="utf-8")
    return output
