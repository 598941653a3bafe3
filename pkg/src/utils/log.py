"""Timestamped stderr logging and progress bars shared by all commands."""

from __future__ import annotations

import sys
from datetime import datetime
from typing import Iterable, TypeVar

from tqdm import tqdm

T = TypeVar("T")

_verbose = False
_progress = True


def configure(verbose: bool = False, quiet: bool = False) -> None:
    """Set global verbosity; quiet also disables progress bars."""
    global _verbose, _progress
    _verbose = verbose and not quiet
    _progress = not quiet


def log(message: str) -> None:
    """Print a timestamped message to stderr when verbose."""
    if _verbose:
        warn(message)


def warn(message: str) -> None:
    """Print a timestamped message to stderr unconditionally."""
    timestamp = datetime.now().isoformat(timespec="seconds")
    print(f"[{timestamp}] {message}", file=sys.stderr, flush=True)


def progress(items: Iterable[T], desc: str, total: int | None = None) -> Iterable[T]:
    """Wrap an iterable in a tqdm bar on stderr (only on a terminal)."""
    disable = not _progress or not sys.stderr.isatty()
    return tqdm(items, desc=desc, total=total, disable=disable, leave=False, file=sys.stderr)
