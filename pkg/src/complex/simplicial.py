"""
Finite simplicial complexes whose faces are partial partitions.

A complex is given by its facets; the full face set is interned per
dimension in canonical face order on first use, and that order is the
row/column order of every boundary matrix built from it.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Sequence

from src.combinatorics.partitions import iter_partial_partitions, partitions_of, is_non_singleton
from src.complex.faces import EMPTY_FACE, PartialPartition, block_key
from src.utils.config import check_ceiling


def maximal_faces(faces: Iterable[PartialPartition]) -> list[PartialPartition]:
    """Faces of a downward-closed family not contained in a larger member."""
    pool = set(faces)
    covered: set[PartialPartition] = set()
    for face in pool:
        for block in face.blocks:
            covered.add(face.without(block))
    return sorted(pool - covered, key=lambda f: (-len(f), f.key))


class SimplicialComplex:
    """Immutable complex over [n]; faces are built lazily and cached."""

    def __init__(
        self,
        n: int,
        facets: Sequence[PartialPartition],
        faces: Iterable[PartialPartition] | None = None,
    ) -> None:
        self.n = n
        self.facets: tuple[PartialPartition, ...] = tuple(facets)
        self._seed_faces = None if faces is None else tuple(faces)
        self._by_dim: dict[int, tuple[PartialPartition, ...]] | None = None
        self._index: dict[int, dict[PartialPartition, int]] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={len(self.facets)})"

    def _build(self) -> dict[int, tuple[PartialPartition, ...]]:
        with self._lock:
            if self._by_dim is None:
                if self._seed_faces is not None:
                    pool = set(self._seed_faces)
                else:
                    pool = set()
                    for facet in self.facets:
                        pool.update(closure(facet))
                grouped: dict[int, list[PartialPartition]] = {}
                for face in pool:
                    grouped.setdefault(face.dim, []).append(face)
                self._by_dim = {
                    d: tuple(sorted(group, key=lambda f: f.key)) for d, group in sorted(grouped.items())
                }
                self._seed_faces = None
        return self._by_dim

    @property
    def dim(self) -> int:
        """Largest face dimension (-1 for the complex {∅})."""
        return max(self._build())

    def faces(self, d: int) -> tuple[PartialPartition, ...]:
        """Faces of dimension d in canonical order (empty when out of range)."""
        return self._build().get(d, ())

    def all_faces(self) -> list[PartialPartition]:
        out: list[PartialPartition] = []
        for d in sorted(self._build()):
            out.extend(self._build()[d])
        return out

    def index(self, d: int) -> dict[PartialPartition, int]:
        """Position of each d-face in the canonical order."""
        cached = self._index.get(d)
        if cached is None:
            cached = {face: i for i, face in enumerate(self.faces(d))}
            with self._lock:
                self._index[d] = cached
        return cached

    def __contains__(self, face: object) -> bool:
        if not isinstance(face, PartialPartition):
            return False
        return face in self.index(face.dim)

    def __len__(self) -> int:
        return sum(len(group) for group in self._build().values())


def closure(face: PartialPartition) -> set[PartialPartition]:
    """All sub-partial-partitions of a face, the empty face included."""
    return set(face.subfaces())


def generated_subcomplex(faces: Iterable[PartialPartition], n: int | None = None) -> SimplicialComplex:
    """Union of the closures of the given faces."""
    generators = set(faces)
    if not generators:
        return SimplicialComplex(n or 0, (EMPTY_FACE,), (EMPTY_FACE,))
    pool: set[PartialPartition] = set()
    for face in generators:
        pool.update(face.subfaces())
    if n is None:
        support = 0
        for face in generators:
            support |= face.support
        n = support.bit_length()
    return SimplicialComplex(n, maximal_faces(pool), pool)


def build_dn(n: int) -> SimplicialComplex:
    """D_n: all partial partitions of [n]; facets are the partitions of [n]."""
    check_ceiling("build_dn", n)
    return _build_dn(n)


@lru_cache(maxsize=16)
def _build_dn(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, partitions_of(n), iter_partial_partitions(n))


def d_n_star(n: int) -> SimplicialComplex:
    """D_n with its non-singleton partitions (all Γ_{j,j}, j >= 1) removed."""
    check_ceiling("d_n_star", n)
    return _d_n_star(n)


@lru_cache(maxsize=16)
def _d_n_star(n: int) -> SimplicialComplex:
    full = _build_dn(n)
    removed = {f for f in full.facets if len(f) >= 1 and is_non_singleton(f)}
    faces = [f for f in full.all_faces() if f not in removed]
    return SimplicialComplex(n, maximal_faces(faces), faces)


def f_vector(c: SimplicialComplex) -> list[int]:
    """Face counts by dimension; index 0 counts the empty face."""
    return [len(c.faces(d)) for d in range(-1, c.dim + 1)]


def is_pure_of_dim(c: SimplicialComplex, d: int) -> bool:
    """True iff every maximal face of c has dimension d."""
    return all(facet.dim == d for facet in c.facets)


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    """Sum over d >= -1 of (-1)^d times the number of d-faces."""
    fv = f_vector(c)
    return sum((-count if (i - 1) % 2 else count) for i, count in enumerate(fv))


def connected_components(c: SimplicialComplex) -> list[frozenset[int]]:
    """Vertex sets of the components of the 1-skeleton, isolated vertices included."""
    vertices = [face.blocks[0] for face in c.faces(0)]
    parent = {v: v for v in vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for edge in c.faces(1):
        a, b = find(edge.blocks[0]), find(edge.blocks[1])
        if a != b:
            parent[max(a, b)] = min(a, b)

    groups: dict[int, set[int]] = {}
    for v in vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted(
        (frozenset(g) for g in groups.values()),
        key=lambda g: min(block_key(v) for v in g),
    )


def complex_to_json(c: SimplicialComplex) -> dict:
    """Export schema: n, facets as block bitmasks, f-vector."""
    return {
        "n": c.n,
        "facets": [facet.to_json() for facet in c.facets],
        "fvector": f_vector(c),
    }
