"""
Facet orders of D_n: decreasing block count, ties broken by the canonical
face order ("lex") or its reverse ("revlex"). Perturbed orders for the
cross-check of the two shelling verifiers are drawn with numpy's Generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from src.combinatorics.partitions import partitions_of
from src.complex.faces import PartialPartition

TIEBREAKS = ("lex", "revlex")


@dataclass(frozen=True)
class ShellingOrder:
    """A linear order F_1 < ... < F_t of facets (1-based positions in the text)."""

    facets: tuple[PartialPartition, ...]

    def __iter__(self) -> Iterator[PartialPartition]:
        return iter(self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __getitem__(self, i: int) -> PartialPartition:
        return self.facets[i]

    def is_size_decreasing(self) -> bool:
        sizes = [len(f) for f in self.facets]
        return all(a >= b for a, b in zip(sizes, sizes[1:]))

    def to_json(self) -> list[list[int]]:
        return [f.to_json() for f in self.facets]


def sort_facets(facets: Sequence[PartialPartition], tiebreak: str = "lex") -> ShellingOrder:
    """Strictly larger facets first; equal sizes by the chosen tie-break."""
    if tiebreak not in TIEBREAKS:
        raise ValueError(f"Unknown tiebreak {tiebreak!r}; choose from {TIEBREAKS}")
    groups: dict[int, list[PartialPartition]] = {}
    for f in facets:
        groups.setdefault(len(f), []).append(f)
    ordered: list[PartialPartition] = []
    for size in sorted(groups, reverse=True):
        ordered.extend(sorted(groups[size], key=lambda f: f.key, reverse=tiebreak == "revlex"))
    return ShellingOrder(tuple(ordered))


def default_shelling_order(n: int, tiebreak: str = "lex") -> ShellingOrder:
    """All partitions of [n] by decreasing block count."""
    return sort_facets(partitions_of(n), tiebreak)


def random_perturbation(order: ShellingOrder, swaps: int, rng: np.random.Generator) -> ShellingOrder:
    """Apply `swaps` random transpositions to an order."""
    facets = list(order.facets)
    if len(facets) < 2:
        return ShellingOrder(tuple(facets))
    for _ in range(swaps):
        i, j = rng.choice(len(facets), size=2, replace=False)
        facets[int(i)], facets[int(j)] = facets[int(j)], facets[int(i)]
    return ShellingOrder(tuple(facets))


def swapped(order: ShellingOrder, a: PartialPartition, b: PartialPartition) -> ShellingOrder:
    """The order with the positions of facets a and b exchanged."""
    facets = list(order.facets)
    i, j = facets.index(a), facets.index(b)
    facets[i], facets[j] = facets[j], facets[i]
    return ShellingOrder(tuple(facets))
