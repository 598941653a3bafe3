"""
Integer chains on partial-partition complexes.

A simplex is oriented by the canonical block order of its face; a chain
maps such faces of one common dimension to nonzero integers. The boundary
removes the i-th block with sign (-1)^i, so a vertex maps to the empty
face with coefficient +1 (the augmented complex).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from src.complex.faces import Block, PartialPartition, block_key
from src.utils.errors import PreconditionError


def permutation_sign(keys: list) -> int:
    """Sign of the permutation sorting `keys` (distinct) ascending."""
    sign = 1
    items = list(keys)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def orient(listing: Iterable[Block]) -> tuple[PartialPartition, int]:
    """Canonical face of an ordered block listing plus the reordering sign."""
    blocks = list(listing)
    return PartialPartition(tuple(blocks)), permutation_sign([block_key(b) for b in blocks])


class Chain:
    """Finite integer combination of oriented simplices of one dimension."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[PartialPartition, int] | None = None) -> None:
        self.degree = degree
        self.terms: dict[PartialPartition, int] = {}
        for face, coeff in (terms or {}).items():
            if len(face) != degree + 1:
                raise PreconditionError(
                    f"Face {face} has dimension {face.dim}, chain degree is {degree}"
                )
            if coeff:
                self.terms[face] = self.terms.get(face, 0) + coeff
        self.terms = {f: v for f, v in self.terms.items() if v}

    @classmethod
    def simplex(cls, face: PartialPartition, coeff: int = 1) -> "Chain":
        return cls(face.dim, {face: coeff})

    @classmethod
    def zero(cls, degree: int) -> "Chain":
        return cls(degree)

    def __repr__(self) -> str:
        body = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}[{f}]" for f, c in self.sorted_terms())
        return f"Chain(deg={self.degree}: {body or '0'})"

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[PartialPartition]:
        return iter(self.terms)

    def __getitem__(self, face: PartialPartition) -> int:
        return self.terms.get(face, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def _combine(self, other: "Chain", scale: int) -> "Chain":
        if other.is_zero():
            return Chain(self.degree, self.terms)
        if self.is_zero():
            return Chain(other.degree, {f: scale * c for f, c in other.terms.items()})
        if self.degree != other.degree:
            raise PreconditionError(f"Cannot add chains of degree {self.degree} and {other.degree}")
        merged = dict(self.terms)
        for face, coeff in other.terms.items():
            merged[face] = merged.get(face, 0) + scale * coeff
        return Chain(self.degree, merged)

    def __add__(self, other: "Chain") -> "Chain":
        return self._combine(other, 1)

    def __sub__(self, other: "Chain") -> "Chain":
        return self._combine(other, -1)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {f: -c for f, c in self.terms.items()})

    def __rmul__(self, scalar: int) -> "Chain":
        return Chain(self.degree, {f: scalar * c for f, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[PartialPartition]:
        return set(self.terms)

    def sorted_terms(self) -> list[tuple[PartialPartition, int]]:
        return sorted(self.terms.items(), key=lambda item: item[0].key)

    def boundary(self) -> "Chain":
        return boundary(self)

    def to_json(self) -> list[dict]:
        return [{"simplex": face.to_json(), "coeff": coeff} for face, coeff in self.sorted_terms()]


def boundary(ch: Chain) -> Chain:
    """Linear extension of the simplex boundary; degree drops by one."""
    acc: dict[PartialPartition, int] = {}
    for face, coeff in ch.terms.items():
        for i, block in enumerate(face.blocks):
            sub = face.without(block)
            acc[sub] = acc.get(sub, 0) + (coeff if i % 2 == 0 else -coeff)
    return Chain(ch.degree - 1, acc)
