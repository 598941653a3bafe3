"""
Exact counts: binomial, Stirling (second kind) and Bell numbers, and the
closed form D(n, j, k) for partitions of [n] into j blocks of which exactly
k are non-singleton.

D(n, j, k) = C(n, j-k) * sum_i (-1)^(n-(j-k)-i) * C(n-(j-k), i) * S(i, j+i-n),
with i running from max(0, n-j) to n-(j-k). Terms whose Stirling index is
negative vanish, so the bound only trims zero terms.

All values are Python ints (arbitrary precision).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    """Row n of the Stirling triangle, S(n, 0..n)."""
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        left = prev[k - 1]
        right = prev[k] if k < n else 0
        row[k] = k * right + left
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k nonempty blocks."""
    if n < 0:
        raise ValueError(f"stirling2: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    # fill iteratively so deep rows never hit the recursion limit
    for m in range(n + 1):
        _stirling_row(m)
    return _stirling_row(n)[k]


def bell(n: int) -> int:
    """Number of partitions of an n-set."""
    if n < 0:
        raise ValueError(f"bell: n must be nonnegative, got {n}")
    return sum(stirling2(n, k) for k in range(n + 1))


def non_singleton_count(m: int, k: int) -> int:
    """D(m, k, k): partitions of an m-set into k blocks, none a singleton."""
    if m < 0 or k < 0 or k > m:
        return 0
    total = 0
    for i in range(max(0, m - k), m + 1):
        sign = -1 if (m - i) % 2 else 1
        total += sign * binomial(m, i) * stirling2(i, k + i - m)
    return total


def d_count(n: int, j: int, k: int) -> int:
    """D(n, j, k) by the closed form; 0 outside 0 <= k <= j <= n."""
    if n < 0:
        raise ValueError(f"d_count: n must be nonnegative, got {n}")
    if k < 0 or j < k or j > n:
        return 0
    singles = j - k
    m = n - singles
    total = 0
    for i in range(max(0, n - j), m + 1):
        sign = -1 if (m - i) % 2 else 1
        total += sign * binomial(m, i) * stirling2(i, j + i - n)
    return binomial(n, singles) * total


def d_count_reduced(n: int, j: int, k: int) -> int:
    """D(n, j, k) as C(n, j-k) * D(n-(j-k), k, k)."""
    if n < 0:
        raise ValueError(f"d_count_reduced: n must be nonnegative, got {n}")
    if k < 0 or j < k or j > n:
        return 0
    return binomial(n, j - k) * non_singleton_count(n - (j - k), k)


def d_count_table(n: int) -> dict[tuple[int, int], int]:
    """All D(n, j, k) for 0 <= k <= j <= n."""
    return {(j, k): d_count(n, j, k) for j in range(n + 1) for k in range(j + 1)}
