"""
Reduced integral homology of partial-partition complexes.

Boundary matrices use the complex's canonical face order for rows and
columns. Betti numbers come from two ranks per degree,
    b_d = f_d - rank(∂_d) - rank(∂_{d+1}),
with ∂_0 the augmentation, so the numbers are reduced ones. Torsion and
integer membership go through the Smith reduction in `sparse`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from src.complex.faces import PartialPartition
from src.complex.simplicial import SimplicialComplex, f_vector, reduced_euler_characteristic
from src.homology.chains import Chain
from src.homology.sparse import SmithReduction, SnfResult, SparseIntMatrix, rank, smith_reduce
from src.utils.errors import PreconditionError
from src.utils.log import log


@dataclass(frozen=True)
class BoundaryMatrix:
    """∂_d with rows the (d-1)-faces and columns the d-faces."""

    degree: int
    row_faces: tuple[PartialPartition, ...]
    col_faces: tuple[PartialPartition, ...]
    matrix: SparseIntMatrix

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


@lru_cache(maxsize=64)
def boundary_matrix(c: SimplicialComplex, d: int) -> BoundaryMatrix:
    """Signed incidence of d-faces on (d-1)-faces; empty of correct shape out of range."""
    rows = c.faces(d - 1)
    cols = c.faces(d)
    row_index = c.index(d - 1)
    columns = []
    for face in cols:
        col: dict[int, int] = {}
        for i, block in enumerate(face.blocks):
            col[row_index[face.without(block)]] = 1 if i % 2 == 0 else -1
        columns.append(col)
    return BoundaryMatrix(d, rows, cols, SparseIntMatrix.from_columns(len(rows), columns))


def compose_vanishes(lower: SparseIntMatrix, upper: SparseIntMatrix) -> bool:
    """True iff lower @ upper is the zero matrix."""
    product = lower.matmul(upper)
    return all(v == 0 for row in product.rows.values() for v in row.values())


def flip_one_sign(m: SparseIntMatrix) -> SparseIntMatrix:
    """Copy of m with its first nonzero entry negated."""
    rows = {i: dict(row) for i, row in m.rows.items()}
    i = min(rows)
    j = min(rows[i])
    rows[i][j] = -rows[i][j]
    return SparseIntMatrix(m.shape, rows)


def boundary_squares_vanish(c: SimplicialComplex, flip_sign: bool = False) -> bool:
    """
    ∂_d ∘ ∂_{d+1} = 0 in every degree of c. With flip_sign, one sign of the
    first nonzero ∂_{d+1} is negated first, which the check must catch.
    """
    pending = flip_sign
    for d in range(0, c.dim + 1):
        upper = boundary_matrix(c, d + 1).matrix
        if pending and not upper.is_zero():
            upper = flip_one_sign(upper)
            pending = False
        if not compose_vanishes(boundary_matrix(c, d).matrix, upper):
            log(f"∂_{d} ∘ ∂_{d + 1} is nonzero for n={c.n}")
            return False
    return True


@lru_cache(maxsize=64)
def _reduction(c: SimplicialComplex, d: int) -> SmithReduction:
    log(f"Smith reduction of ∂_{d} {boundary_matrix(c, d).shape}")
    return smith_reduce(boundary_matrix(c, d).matrix)


@lru_cache(maxsize=64)
def boundary_rank(c: SimplicialComplex, d: int, method: str = "rank") -> int:
    """Rank of ∂_d, over QQ ("rank") or from the integer reduction ("snf")."""
    if method == "snf":
        return _reduction(c, d).result.rank
    if method != "rank":
        raise ValueError(f"Unknown rank method {method!r}")
    return rank(boundary_matrix(c, d).matrix)


def smith_of_boundary(c: SimplicialComplex, d: int) -> SnfResult:
    return _reduction(c, d).result


def reduced_betti(c: SimplicialComplex, method: str = "rank") -> list[int]:
    """Reduced Betti numbers b_0 .. b_dim."""
    out = []
    for d in range(0, c.dim + 1):
        out.append(len(c.faces(d)) - boundary_rank(c, d, method) - boundary_rank(c, d + 1, method))
    return out


def betti_minus_one(c: SimplicialComplex) -> int:
    """b_{-1}: 1 only for the complex {∅}."""
    return len(c.faces(-1)) - boundary_rank(c, 0)


def torsion_coefficients(c: SimplicialComplex, d: int) -> list[int]:
    """Invariant factors of ∂_{d+1} above 1 (torsion of H_d)."""
    return list(smith_of_boundary(c, d + 1).torsion)


def is_acyclic(c: SimplicialComplex) -> bool:
    """All reduced Betti numbers vanish, b_{-1} included."""
    return betti_minus_one(c) == 0 and not any(reduced_betti(c))


def is_cycle(ch: Chain) -> bool:
    return ch.boundary().is_zero()


def chain_vector(ch: Chain, c: SimplicialComplex) -> dict[int, int]:
    """Coordinates of a chain in the canonical d-face basis of c."""
    index = c.index(ch.degree)
    vec = {}
    for face, coeff in ch.terms.items():
        pos = index.get(face)
        if pos is None:
            raise PreconditionError(f"Simplex {face} is not a face of {c!r}")
        vec[pos] = coeff
    return vec


def _require_cycle(ch: Chain) -> None:
    if not is_cycle(ch):
        raise PreconditionError(f"Not a cycle: {ch!r}")


def is_boundary(ch: Chain, c: SimplicialComplex) -> bool:
    """True iff ch = ∂x for an integer (degree+1)-chain x of c."""
    _require_cycle(ch)
    if ch.is_zero():
        return True
    return _reduction(c, ch.degree + 1).solvable(chain_vector(ch, c))


def quotient_rank(cycles: Sequence[Chain], d: int, c: SimplicialComplex) -> int:
    """Rank over QQ of the cycles modulo the image of ∂_{d+1}."""
    vectors = []
    for ch in cycles:
        _require_cycle(ch)
        if ch.is_zero():
            continue
        if ch.degree != d:
            raise PreconditionError(f"Cycle of degree {ch.degree} passed for degree {d}")
        vectors.append(chain_vector(ch, c))
    if not vectors:
        return 0
    upper = boundary_matrix(c, d + 1).matrix
    return rank(upper.hstack(vectors)) - boundary_rank(c, d + 1)


def homology_report(c: SimplicialComplex, torsion: bool = True, method: str = "rank") -> dict:
    """JSON fragment: betti (plus b_{-1}), torsion per degree, f-vector, reduced Euler characteristic."""
    report = {
        "betti": reduced_betti(c, method),
        "bettiMinusOne": betti_minus_one(c),
        "fvector": f_vector(c),
        "eulerReduced": reduced_euler_characteristic(c),
    }
    if torsion:
        report["torsion"] = {str(d): torsion_coefficients(c, d) for d in range(0, c.dim + 1)}
    return report
