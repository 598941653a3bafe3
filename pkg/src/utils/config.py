"""
Run-time settings with environment overrides.

Environment:
    PARTHOM_MAX_N   replaces every size ceiling (enumeration, homology,
                    lemma check, basis verification) at once.
    PARTHOM_SEED    default random seed for sampled checks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from src.utils.errors import ResourceLimitError

ENV_MAX_N = "PARTHOM_MAX_N"
ENV_SEED = "PARTHOM_SEED"


@dataclass(frozen=True)
class Settings:
    max_n: int = 12
    max_n_homology: int = 7
    max_n_lemma: int = 7
    max_n_basis: int = 6
    seed: int = 0
    samples: int = 50


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


def get_settings() -> Settings:
    """Return default settings with environment overrides applied."""
    settings = Settings()
    max_n = _env_int(ENV_MAX_N)
    if max_n is not None:
        settings = replace(
            settings,
            max_n=max_n,
            max_n_homology=max_n,
            max_n_lemma=max_n,
            max_n_basis=max_n,
        )
    seed = _env_int(ENV_SEED)
    if seed is not None:
        settings = replace(settings, seed=seed)
    return settings


def check_ceiling(what: str, n: int, ceiling: int | None = None) -> None:
    """Raise ResourceLimitError if n is negative or above the ceiling."""
    if n < 0:
        raise ValueError(f"{what}: n must be nonnegative, got {n}")
    limit = get_settings().max_n if ceiling is None else ceiling
    if n > limit:
        raise ResourceLimitError(what, n, limit)
