"""
Blocks and partial partitions, the vertex and face types of D_n.

A block is a nonempty subset of [n] stored as an int bitmask
(element i <-> bit i-1). A partial partition is a tuple of pairwise
disjoint blocks kept in the global block order: by minimum element,
then by bitmask value.

Text notation drops braces and commas inside blocks, e.g. "12,34" is
{{1,2},{3,4}}. Faces containing an element >= 10 separate elements with
"." instead ("1.10,2").
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from src.utils.errors import PreconditionError

Block = int

EMPTY_SYMBOL = "∅"


def block_from_elements(elements: Iterable[int]) -> Block:
    """Return the bitmask of a set of positive integers."""
    mask = 0
    for e in elements:
        if e < 1:
            raise PreconditionError(f"Block elements must be positive, got {e}")
        mask |= 1 << (e - 1)
    if mask == 0:
        raise PreconditionError("A block must be nonempty.")
    return mask


def block_elements(block: Block) -> tuple[int, ...]:
    """Return the sorted elements of a block."""
    out = []
    i = 1
    while block:
        if block & 1:
            out.append(i)
        block >>= 1
        i += 1
    return tuple(out)


def block_key(block: Block) -> tuple[int, int]:
    """Sort key of the global block order."""
    return (block & -block, block)


def is_singleton(block: Block) -> bool:
    return block & (block - 1) == 0


def full_block(n: int) -> Block:
    """Return the bitmask of [n]."""
    return (1 << n) - 1


def format_block(block: Block, wide: bool = False) -> str:
    elements = block_elements(block)
    if wide:
        return ".".join(str(e) for e in elements)
    return "".join(str(e) for e in elements)


def parse_block(token: str) -> Block:
    token = token.strip()
    if not token:
        raise PreconditionError("Empty block token.")
    try:
        if "." in token:
            elements = [int(part) for part in token.split(".")]
        else:
            elements = [int(ch) for ch in token]
    except ValueError as e:
        raise PreconditionError(f"Cannot parse block {token!r}") from e
    if len(set(elements)) != len(elements):
        raise PreconditionError(f"Repeated element in block {token!r}")
    return block_from_elements(elements)


@dataclass(frozen=True, slots=True)
class PartialPartition:
    """A set of pairwise-disjoint blocks; a face of dimension len - 1."""

    blocks: tuple[Block, ...] = ()

    def __post_init__(self) -> None:
        blocks = tuple(sorted(self.blocks, key=block_key))
        seen = 0
        for b in blocks:
            if b <= 0:
                raise PreconditionError(f"Invalid block bitmask {b}")
            if seen & b:
                raise PreconditionError(
                    f"Blocks overlap: {[format_block(x) for x in blocks]}"
                )
            seen |= b
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def trusted(cls, blocks: tuple[Block, ...]) -> "PartialPartition":
        """Build from blocks already disjoint and in canonical order."""
        face = object.__new__(cls)
        object.__setattr__(face, "blocks", blocks)
        return face

    @classmethod
    def parse(cls, text: str) -> "PartialPartition":
        """Parse the brace-dropping notation, e.g. "12,34" or "∅"."""
        text = text.strip().strip("{}")
        if text in ("", EMPTY_SYMBOL):
            return cls(())
        return cls(tuple(parse_block(tok) for tok in text.split(",")))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __contains__(self, block: object) -> bool:
        return block in self.blocks

    def __str__(self) -> str:
        if not self.blocks:
            return EMPTY_SYMBOL
        wide = self.support >= 1 << 9
        return ",".join(format_block(b, wide) for b in self.blocks)

    @property
    def dim(self) -> int:
        return len(self.blocks) - 1

    @property
    def support(self) -> int:
        """Union of the blocks as a bitmask."""
        mask = 0
        for b in self.blocks:
            mask |= b
        return mask

    @property
    def key(self) -> tuple[tuple[int, int], ...]:
        """Sort key of the canonical face order (lexicographic on blocks)."""
        return tuple(block_key(b) for b in self.blocks)

    def is_partition_of(self, n: int) -> bool:
        return self.support == full_block(n)

    def singleton_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if is_singleton(b))

    def non_singleton_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if not is_singleton(b))

    def without(self, block: Block) -> "PartialPartition":
        return PartialPartition.trusted(tuple(b for b in self.blocks if b != block))

    def issubset(self, other: "PartialPartition") -> bool:
        return set(self.blocks).issubset(other.blocks)

    def intersection(self, other: "PartialPartition") -> "PartialPartition":
        theirs = set(other.blocks)
        return PartialPartition.trusted(tuple(b for b in self.blocks if b in theirs))

    def difference(self, other: "PartialPartition") -> "PartialPartition":
        theirs = set(other.blocks)
        return PartialPartition.trusted(tuple(b for b in self.blocks if b not in theirs))

    def subfaces(self) -> Iterator["PartialPartition"]:
        """Yield all 2^len sub-partial-partitions, smallest first."""
        for size in range(len(self.blocks) + 1):
            for combo in combinations(self.blocks, size):
                yield PartialPartition.trusted(combo)

    def to_json(self) -> list[int]:
        return list(self.blocks)


EMPTY_FACE = PartialPartition(())


def canonical_sorted(faces: Iterable[PartialPartition]) -> list[PartialPartition]:
    """Sort faces by size, then by the canonical face order."""
    return sorted(faces, key=lambda f: (len(f), f.key))
