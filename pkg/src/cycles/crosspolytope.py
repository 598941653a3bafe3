"""
Cross-polytope cycles in D_n.

For a partition F = {x_1, ..., x_j} of [n] without singleton blocks
(blocks indexed in the global block order) and a choice of one element
s_i in each x_i, the face set
    HO(F) = {{x_1^e_1, ..., x_j^e_j} : e in {-1, 1}^j},
with x_i^1 = x_i and x_i^-1 = {s_i}, generates a copy of the boundary of
the j-dimensional cross-polytope. The signed sum
    sigma_F = sum_e (prod e_i) * [x_1^e_1, ..., x_j^e_j]
(each listing re-oriented to canonical block order) is a (j-1)-cycle that
contains F as its only non-singleton partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Mapping

import numpy as np

from src.combinatorics.counting import d_count
from src.combinatorics.partitions import enumerate_d_njk
from src.complex.faces import Block, PartialPartition, block_elements
from src.complex.simplicial import SimplicialComplex, build_dn, d_n_star, generated_subcomplex
from src.homology.chains import Chain, orient
from src.homology.reduced import is_boundary, is_cycle, quotient_rank, reduced_betti
from src.utils.config import check_ceiling, get_settings
from src.utils.errors import PreconditionError
from src.utils.log import log

SignVector = tuple[int, ...]


def _require_non_singleton(face: PartialPartition) -> None:
    if len(face) == 0:
        raise PreconditionError("The empty partition has no cross-polytope cycle.")
    singles = face.singleton_blocks()
    if singles:
        raise PreconditionError(f"{face} has singleton block(s); x^-1 would equal x.")


@dataclass(frozen=True)
class RepresentativeChoice:
    """One chosen element per block of a fixed non-singleton partition."""

    reps: tuple[tuple[Block, int], ...]

    @classmethod
    def of(cls, face: PartialPartition, reps: Mapping[Block, int]) -> "RepresentativeChoice":
        _require_non_singleton(face)
        if set(reps) != set(face.blocks):
            raise PreconditionError(f"Choice must cover exactly the blocks of {face}.")
        for block, element in reps.items():
            if element not in block_elements(block):
                raise PreconditionError(f"Element {element} is not in block {block_elements(block)}.")
        return cls(tuple((b, reps[b]) for b in face.blocks))

    @classmethod
    def from_elements(cls, face: PartialPartition, elements: tuple[int, ...]) -> "RepresentativeChoice":
        """Choice listing one element per block in block order."""
        if len(elements) != len(face):
            raise PreconditionError(f"Need {len(face)} representatives, got {len(elements)}.")
        return cls.of(face, dict(zip(face.blocks, elements)))

    def __getitem__(self, block: Block) -> int:
        return dict(self.reps)[block]

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.reps)

    def to_json(self) -> dict[str, int]:
        return {str(b): e for b, e in self.reps}


def canonical_choice(face: PartialPartition) -> RepresentativeChoice:
    """reps[x] = min(x) for every block."""
    _require_non_singleton(face)
    return RepresentativeChoice.of(face, {b: block_elements(b)[0] for b in face.blocks})


def all_choices(face: PartialPartition) -> Iterator[RepresentativeChoice]:
    _require_non_singleton(face)
    for elements in product(*(block_elements(b) for b in face.blocks)):
        yield RepresentativeChoice.from_elements(face, elements)


def random_choice(face: PartialPartition, rng: np.random.Generator) -> RepresentativeChoice:
    elements = tuple(int(rng.choice(block_elements(b))) for b in face.blocks)
    return RepresentativeChoice.from_elements(face, elements)


def _checked(face: PartialPartition, choice: RepresentativeChoice) -> tuple[Block, ...]:
    _require_non_singleton(face)
    if tuple(b for b, _ in choice.reps) != face.blocks:
        raise PreconditionError(f"Choice does not belong to {face}.")
    return tuple(1 << (e - 1) for _, e in choice.reps)


def _listing(face: PartialPartition, singles: tuple[Block, ...], eps: SignVector) -> list[Block]:
    out = []
    for x, s, e in zip(face.blocks, singles, eps):
        if e == 1:
            out.append(x)
        elif e == -1:
            out.append(s)
    return out


def ho_faces(face: PartialPartition, choice: RepresentativeChoice) -> dict[SignVector, PartialPartition]:
    """Every sign vector in {-1, 0, 1}^j with its face (0 omits the block)."""
    singles = _checked(face, choice)
    return {
        eps: PartialPartition(tuple(_listing(face, singles, eps)))
        for eps in product((-1, 0, 1), repeat=len(face))
    }


def ho_set(face: PartialPartition, choice: RepresentativeChoice) -> set[PartialPartition]:
    """The 2^j faces of HO(F)."""
    singles = _checked(face, choice)
    return {
        PartialPartition(tuple(_listing(face, singles, eps)))
        for eps in product((1, -1), repeat=len(face))
    }


def sigma_chain(face: PartialPartition, choice: RepresentativeChoice) -> Chain:
    """The signed sum of HO(F), a chain of degree j - 1."""
    singles = _checked(face, choice)
    terms: dict[PartialPartition, int] = {}
    for eps in product((1, -1), repeat=len(face)):
        simplex, sign = orient(_listing(face, singles, eps))
        terms[simplex] = prod(eps) * sign
    return Chain(len(face) - 1, terms)


def ho_closure(face: PartialPartition, choice: RepresentativeChoice) -> SimplicialComplex:
    """Subcomplex generated by HO(F); 3^j faces with the empty face."""
    return generated_subcomplex(ho_set(face, choice), n=face.support.bit_length())


@dataclass(frozen=True)
class CrossPolytopePoset:
    """Faces of the boundary of the j-dimensional cross-polytope as sign vectors."""

    j: int

    @cached_property
    def elements(self) -> np.ndarray:
        return np.array(list(product((-1, 0, 1), repeat=self.j)), dtype=np.int8).reshape(-1, self.j)

    def vectors(self) -> set[SignVector]:
        return {tuple(int(v) for v in row) for row in self.elements}

    @staticmethod
    def leq(a: SignVector, b: SignVector) -> bool:
        """a <= b iff each coordinate of a equals b's or is 0."""
        a_arr, b_arr = np.asarray(a), np.asarray(b)
        return bool(np.all((a_arr == b_arr) | (a_arr == 0)))

    @property
    def bottom(self) -> SignVector:
        return (0,) * self.j

    def maximal(self) -> list[SignVector]:
        rows = self.elements[np.all(self.elements != 0, axis=1)]
        return [tuple(int(v) for v in row) for row in rows]

    def counts_by_support(self) -> list[int]:
        """Number of elements with s nonzero coordinates, s = 0..j."""
        support = np.count_nonzero(self.elements, axis=1)
        return np.bincount(support, minlength=self.j + 1).tolist()


def crosspolytope_poset(j: int) -> CrossPolytopePoset:
    if j < 1:
        raise PreconditionError(f"Cross-polytope dimension must be at least 1, got {j}")
    return CrossPolytopePoset(j)


def verify_crosspolytope_iso(face: PartialPartition, choice: RepresentativeChoice) -> bool:
    """Face poset of the HO closure maps bijectively and order-preservingly onto {-1,0,1}^j."""
    singles = _checked(face, choice)
    closure = ho_closure(face, choice)
    poset = crosspolytope_poset(len(face))
    faces = closure.all_faces()
    image: dict[PartialPartition, SignVector] = {}
    for g in faces:
        eps = [0] * len(face)
        for block in g.blocks:
            hits = [i for i, (x, s) in enumerate(zip(face.blocks, singles)) if block in (x, s)]
            if len(hits) != 1 or eps[hits[0]] != 0:
                log(f"Face {g} does not map to a sign vector")
                return False
            eps[hits[0]] = 1 if block == face.blocks[hits[0]] else -1
        image[g] = tuple(eps)
    if len(set(image.values())) != len(faces) or set(image.values()) != poset.vectors():
        return False
    for g in faces:
        for h in faces:
            if g.issubset(h) != poset.leq(image[g], image[h]):
                log(f"Order mismatch between {g} and {h}")
                return False
    return True


def basis_cycles(n: int, j: int) -> list[Chain]:
    """sigma_F with the canonical choice for every F in D_{n,j,j}."""
    check_ceiling("basis_cycles", n)
    return [sigma_chain(f, canonical_choice(f)) for f in enumerate_d_njk(n, j, j)]


@dataclass(frozen=True)
class BasisVerdict:
    n: int
    j: int
    cycles: int
    all_cycles: bool
    quotient_rank: int
    betti: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.all_cycles and self.quotient_rank == self.expected == self.betti

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "j": self.j,
            "cycles": self.cycles,
            "allCycles": self.all_cycles,
            "quotientRank": self.quotient_rank,
            "betti": self.betti,
            "expected": self.expected,
            "verified": self.ok,
        }


def verify_basis(n: int, j: int) -> BasisVerdict:
    """The sigma_F are cycles and span a free summand of the expected rank."""
    if not 1 <= j <= n:
        raise PreconditionError(f"Need 1 <= j <= n, got n={n}, j={j}")
    check_ceiling("verify_basis", n, get_settings().max_n_basis)
    complex_ = build_dn(n)
    cycles = basis_cycles(n, j)
    all_cycles = all(is_cycle(ch) for ch in cycles)
    rank = quotient_rank(cycles, j - 1, complex_) if all_cycles else -1
    return BasisVerdict(
        n=n,
        j=j,
        cycles=len(cycles),
        all_cycles=all_cycles,
        quotient_rank=rank,
        betti=reduced_betti(complex_)[j - 1],
        expected=d_count(n, j, j),
    )


def _ground(face: PartialPartition) -> int:
    n = face.support.bit_length()
    if not face.is_partition_of(n):
        raise PreconditionError(f"{face} is not a partition of [{n}]")
    return n


def verify_choice_independence(
    face: PartialPartition, choice_a: RepresentativeChoice, choice_b: RepresentativeChoice
) -> bool:
    """sigma_F(a) - sigma_F(b) bounds an integer chain of D_n."""
    n = _ground(face)
    diff = sigma_chain(face, choice_a) - sigma_chain(face, choice_b)
    return is_boundary(diff, build_dn(n))


def sigma_support_in_star(
    face: PartialPartition, choice_a: RepresentativeChoice, choice_b: RepresentativeChoice
) -> bool:
    """The difference of two sigma_F avoids every non-singleton partition."""
    n = _ground(face)
    diff = sigma_chain(face, choice_a) - sigma_chain(face, choice_b)
    star = d_n_star(n)
    return all(f in star for f in diff.support())


def cycle_report(face: PartialPartition, choice: RepresentativeChoice) -> dict:
    """JSON fragment for one cross-polytope cycle."""
    chain = sigma_chain(face, choice)
    return {
        "F": face.to_json(),
        "reps": choice.to_json(),
        "chain": chain.to_json(),
        "isCycle": is_cycle(chain),
        "crossPolytopeIso": verify_crosspolytope_iso(face, choice),
    }
