"""
Exhaustive generators for set partitions and partial partitions.

Partitions of a ground set come out in restricted-growth-string order:
elements e_1 < ... < e_m get labels a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}),
and strings are visited lexicographically. Partial partitions of [n] are
ordered by subset bitmask, then by that order within the subset.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from src.complex.faces import PartialPartition, full_block, is_singleton
from src.utils.config import check_ceiling


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


def _growth_strings(m: int, blocks: int | None = None) -> Iterator[list[int]]:
    """Yield restricted growth strings of length m (optionally with a fixed block count)."""
    labels = [0] * m

    def visit(i: int, top: int) -> Iterator[list[int]]:
        if i == m:
            if blocks is None or top + 1 == blocks:
                yield labels
            return
        used = top + 1
        ceiling = top + 1 if blocks is None else min(top + 1, blocks - 1)
        for v in range(ceiling + 1):
            opened = used + (1 if v == used else 0)
            if blocks is not None and blocks - opened > m - i - 1:
                continue
            labels[i] = v
            yield from visit(i + 1, max(top, v))

    if blocks is not None and (blocks > m or (blocks == 0 and m > 0)):
        return
    if m == 0:
        yield labels
        return
    yield from visit(0, -1)


def partitions_of_mask(mask: int, blocks: int | None = None) -> Iterator[PartialPartition]:
    """Yield the partitions of the subset `mask`, in growth-string order."""
    bits = _bits(mask)
    for labels in _growth_strings(len(bits), blocks):
        parts = [0] * (max(labels) + 1 if labels else 0)
        for bit, label in zip(bits, labels):
            parts[label] |= bit
        # growth-string labels open blocks in order of their minimum element
        yield PartialPartition.trusted(tuple(parts))


def enumerate_set_partitions(ground: Iterable[int]) -> list[PartialPartition]:
    """All partitions of a finite set of positive integers."""
    elements = sorted(set(ground))
    check_ceiling("enumerate_set_partitions", len(elements))
    mask = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"Ground elements must be positive, got {e}")
        mask |= 1 << (e - 1)
    return list(partitions_of_mask(mask))


def partitions_of(n: int, blocks: int | None = None) -> list[PartialPartition]:
    """Partitions of [n] (the facets of D_n), optionally with a fixed block count."""
    check_ceiling("partitions_of", n)
    return list(partitions_of_mask(full_block(n), blocks))


def iter_partial_partitions(n: int, size_filter: int | None = None) -> Iterator[PartialPartition]:
    check_ceiling("enumerate_partial_partitions", n)
    for mask in range(1 << n):
        yield from partitions_of_mask(mask, size_filter)


def enumerate_partial_partitions(n: int, size_filter: int | None = None) -> list[PartialPartition]:
    """Every partition of every subset of [n], empty partial partition included."""
    return list(iter_partial_partitions(n, size_filter))


def count_non_singleton_blocks(face: PartialPartition) -> int:
    return sum(1 for b in face.blocks if not is_singleton(b))


def enumerate_d_njk(n: int, j: int, k: int) -> list[PartialPartition]:
    """Partitions of [n] with j blocks, exactly k of them non-singleton."""
    check_ceiling("enumerate_d_njk", n)
    if j < 0 or k < 0 or k > j or j > n:
        return []
    return [p for p in partitions_of_mask(full_block(n), j) if count_non_singleton_blocks(p) == k]


def is_non_singleton(face: PartialPartition) -> bool:
    """True when no block of the face is a singleton."""
    return all(not is_singleton(b) for b in face.blocks)