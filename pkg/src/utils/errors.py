"""Exception types raised by the library; the CLI maps them to exit codes."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """Raised when a ground set or command exceeds its configured ceiling."""

    def __init__(self, what: str, n: int, ceiling: int) -> None:
        super().__init__(
            f"{what}: n={n} exceeds the configured ceiling {ceiling} "
            "(set PARTHOM_MAX_N to raise it)."
        )
        self.n = n
        self.ceiling = ceiling


class PreconditionError(ValueError):
    """Raised when an input violates an operation's precondition."""


class ExchangeError(RuntimeError):
    """Raised when no exchange witness exists for a pair of facets."""
