"""
Shellability checks for a facet order, by the definition and by the
exchange lemma, plus restriction sets and the exchange witness used in
the shellability argument for D_n.

Definition: for s >= 2 the complex (closures of F_1..F_{s-1}) ∩ closure(F_s)
is pure of dimension dim(F_s) - 1.
Exchange lemma: for all q < s there are r < s and x ∈ F_s with
F_q ∩ F_s ⊆ F_r ∩ F_s = F_s \\ {x}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from src.complex.faces import Block, PartialPartition, block_key, is_singleton
from src.complex.simplicial import SimplicialComplex, generated_subcomplex, is_pure_of_dim
from src.utils.errors import ExchangeError, PreconditionError
from src.utils.log import log, progress


@dataclass(frozen=True)
class ShellingVerdict:
    ok: bool
    failing_position: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RestrictionSet:
    """R(F_s): blocks of F_s whose removal lands in the earlier closures."""

    facet: PartialPartition
    removable: frozenset[Block] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.removable)

    def to_json(self) -> list[int]:
        return sorted(self.removable, key=block_key)


def _check_order(c: SimplicialComplex, order: Sequence[PartialPartition]) -> list[PartialPartition]:
    facets = list(order)
    if len(facets) != len(c.facets) or set(facets) != set(c.facets):
        raise PreconditionError("Order is not a permutation of the complex's facets.")
    return facets


def verify_shelling_definition(c: SimplicialComplex, order: Sequence[PartialPartition]) -> ShellingVerdict:
    """Check each attachment complex for purity in codimension one."""
    facets = _check_order(c, order)
    seen: set[PartialPartition] = set()
    for s, facet in enumerate(progress(facets, "definition"), start=1):
        if s >= 2:
            meet = [g for g in facet.subfaces() if g in seen]
            attachment = generated_subcomplex(meet, n=c.n)
            if not is_pure_of_dim(attachment, facet.dim - 1):
                dims = sorted({f.dim for f in attachment.facets})
                detail = f"F_{s} = {facet}: attachment has maximal faces of dimensions {dims}"
                log(f"Shelling definition fails at s={s}: {detail}")
                return ShellingVerdict(False, s, detail)
        seen.update(facet.subfaces())
    return ShellingVerdict(True)


def _exchange_blocks(
    facet: PartialPartition,
    earlier: Sequence[PartialPartition],
    owner: dict[PartialPartition, int],
) -> dict[Block, int]:
    """Blocks x of facet with some earlier F_r ∩ facet = facet \\ {x}, mapped to such an r (1-based)."""
    found: dict[Block, int] = {}
    for x in facet.blocks:
        target = facet.without(x)
        r = owner.get(target)
        if r is None:
            continue
        if x in earlier[r - 1]:
            r = next(
                (i for i, f in enumerate(earlier, start=1) if f.intersection(facet) == target),
                None,
            )
            if r is None:
                continue
        found[x] = r
    return found


def verify_shelling_lemma(c: SimplicialComplex, order: Sequence[PartialPartition]) -> ShellingVerdict:
    """Check the exchange condition for every pair q < s."""
    facets = _check_order(c, order)
    owner: dict[PartialPartition, int] = {}
    for s, facet in enumerate(progress(facets, "lemma"), start=1):
        if s >= 2:
            exchange = _exchange_blocks(facet, facets[: s - 1], owner)
            for q in range(1, s):
                earlier = facets[q - 1]
                if not any(x not in earlier for x in exchange):
                    detail = f"no exchange for q={q} ({earlier}), s={s} ({facet})"
                    log(f"Shelling lemma fails: {detail}")
                    return ShellingVerdict(False, s, detail)
        for g in facet.subfaces():
            owner.setdefault(g, s)
    return ShellingVerdict(True)


def restrictions(c: SimplicialComplex, order: Sequence[PartialPartition]) -> list[RestrictionSet]:
    """R(F_s) for every position s of the order."""
    facets = _check_order(c, order)
    seen: set[PartialPartition] = set()
    out = []
    for facet in facets:
        removable = frozenset(x for x in facet.blocks if facet.without(x) in seen)
        out.append(RestrictionSet(facet, removable))
        seen.update(facet.subfaces())
    return out


def restriction(c: SimplicialComplex, order: Sequence[PartialPartition], s: int) -> RestrictionSet:
    """R(F_s) for a 1-based position s."""
    if not 1 <= s <= len(order):
        raise PreconditionError(f"Position s={s} outside 1..{len(order)}")
    return restrictions(c, order)[s - 1]


def split_block(x: Block) -> tuple[Block, Block]:
    """Split a non-singleton block into {min(x)} and the rest."""
    low = x & -x
    return low, x ^ low


def exchange_witness(f_q: PartialPartition, f_s: PartialPartition) -> tuple[Block, PartialPartition]:
    """
    Block x of F_s \\ F_q and facet F_r = (F_s \\ {x}) ∪ {x_1, x_2} with
    F_q ∩ F_s ⊆ F_r ∩ F_s = F_s \\ {x} and |F_r| = |F_s| + 1.
    """
    if f_q == f_s:
        raise PreconditionError("Exchange witness needs two distinct facets.")
    if f_q.support != f_s.support:
        raise PreconditionError(f"{f_q} and {f_s} partition different sets.")
    if len(f_q) < len(f_s):
        raise PreconditionError(f"|F_q| = {len(f_q)} is smaller than |F_s| = {len(f_s)}.")
    common = f_q.intersection(f_s)
    for x in f_s.difference(f_q).blocks:
        if is_singleton(x):
            continue
        x1, x2 = split_block(x)
        f_r = PartialPartition(f_s.without(x).blocks + (x1, x2))
        meet = f_r.intersection(f_s)
        if common.issubset(meet) and meet == f_s.without(x):
            return x, f_r
    raise ExchangeError(f"No non-singleton block in F_s \\ F_q for F_q={f_q}, F_s={f_s}")
