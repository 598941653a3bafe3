"""Facets grouped by (block count, restriction size): the table Γ_{j,k}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from src.combinatorics.partitions import enumerate_d_njk
from src.complex.faces import PartialPartition
from src.complex.simplicial import SimplicialComplex
from src.shelling.verify import restrictions


@dataclass(frozen=True)
class GammaTable:
    entries: dict[tuple[int, int], frozenset[PartialPartition]]

    def cell(self, j: int, k: int) -> frozenset[PartialPartition]:
        return self.entries.get((j, k), frozenset())

    def to_json(self) -> dict[str, list[list[int]]]:
        return {
            f"{j},{k}": [f.to_json() for f in sorted(cell, key=lambda f: f.key)]
            for (j, k), cell in sorted(self.entries.items())
        }


def gamma_table(c: SimplicialComplex, order: Sequence[PartialPartition]) -> GammaTable:
    """Γ_{j,k} = facets with j blocks whose restriction has k blocks."""
    cells: dict[tuple[int, int], set[PartialPartition]] = {}
    for rs in restrictions(c, order):
        cells.setdefault((len(rs.facet), len(rs)), set()).add(rs.facet)
    return GammaTable({key: frozenset(cell) for key, cell in cells.items()})


def h_counts(table: GammaTable) -> dict[tuple[int, int], int]:
    """|Γ_{j,k}| for every nonempty cell."""
    return {key: len(cell) for key, cell in sorted(table.entries.items())}


def gamma_matches_d_njk(table: GammaTable, n: int) -> bool:
    """Every cell equals D_{n,j,k} as a set, and no other partitions appear."""
    for j in range(n + 1):
        for k in range(j + 1):
            if table.cell(j, k) != frozenset(enumerate_d_njk(n, j, k)):
                return False
    return all(0 <= k <= j <= n for j, k in table.entries)
