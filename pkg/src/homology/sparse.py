"""
Sparse integer matrices and their Smith normal form.

The reduction repeatedly takes a nonzero entry of minimal absolute value
as pivot, clears its row and column with floor-division steps, and moves
the pivot to a smaller remainder whenever one appears. Row operations are
logged so right-hand sides can be replayed later for integer membership
tests. The diagonal is brought into a divisibility chain at the end.

Rank over QQ (no torsion needed) goes through sympy's sparse DomainMatrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


class SparseIntMatrix:
    """Integer matrix stored as row -> {col: value}, zeros never stored."""

    def __init__(self, shape: tuple[int, int], rows: dict[int, dict[int, int]] | None = None) -> None:
        self.shape = shape
        self.rows: dict[int, dict[int, int]] = {}
        for i, row in (rows or {}).items():
            kept = {j: v for j, v in row.items() if v}
            if kept:
                self.rows[i] = kept

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls((nrows, ncols), {i: {j: int(v) for j, v in enumerate(row)} for i, row in enumerate(data)})

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[dict[int, int]]) -> "SparseIntMatrix":
        rows: dict[int, dict[int, int]] = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                rows.setdefault(i, {})[j] = v
        return cls((nrows, len(columns)), rows)

    def __repr__(self) -> str:
        return f"SparseIntMatrix(shape={self.shape}, nnz={self.nnz})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def get(self, i: int, j: int) -> int:
        return self.rows.get(i, {}).get(j, 0)

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [{} for _ in range(self.shape[1])]
        for i, row in self.rows.items():
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.shape[1] for _ in range(self.shape[0])]
        for i, row in self.rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def is_zero(self) -> bool:
        return not self.rows

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"Shape mismatch {self.shape} x {other.shape}")
        out: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            acc: dict[int, int] = {}
            for k, a in row.items():
                for j, b in other.rows.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + a * b
            out[i] = acc
        return SparseIntMatrix((self.shape[0], other.shape[1]), out)

    def hstack(self, extra: Iterable[dict[int, int]]) -> "SparseIntMatrix":
        """Append columns given as {row: value} maps on the right."""
        rows = {i: dict(row) for i, row in self.rows.items()}
        width = self.shape[1]
        for col in extra:
            for i, v in col.items():
                rows.setdefault(i, {})[width] = v
            width += 1
        return SparseIntMatrix((self.shape[0], width), rows)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SparseIntMatrix":
        """Entry (i, j) moves to (row_perm[i], col_perm[j])."""
        rows: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            rows[row_perm[i]] = {col_perm[j]: v for j, v in row.items()}
        return SparseIntMatrix(self.shape, rows)


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    invariant_factors: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def divisibility_chain(values: Iterable[int]) -> tuple[int, ...]:
    """Turn nonzero diagonal entries into invariant factors via gcd/lcm swaps."""
    diag = sorted(abs(v) for v in values if v)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a // g * b
    return tuple(diag)


@dataclass
class SmithReduction:
    """A finished reduction: pivot values by row plus the logged row operations."""

    shape: tuple[int, int]
    pivots: dict[int, int] = field(default_factory=dict)
    row_ops: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def result(self) -> SnfResult:
        return SnfResult(divisibility_chain(self.pivots.values()), self.shape)

    def solvable(self, rhs: dict[int, int]) -> bool:
        """True iff A x = rhs has an integer solution x."""
        vec = {i: v for i, v in rhs.items() if v}
        for target, source, q in self.row_ops:
            v = vec.get(source)
            if v:
                vec[target] = vec.get(target, 0) + q * v
        for i, v in vec.items():
            if v == 0:
                continue
            p = self.pivots.get(i)
            if p is None or v % p:
                return False
        return True


class _Workspace:
    """Row and column views of the same entries, kept in sync."""

    def __init__(self, m: SparseIntMatrix) -> None:
        self.rows: dict[int, dict[int, int]] = {i: dict(row) for i, row in m.rows.items()}
        self.cols: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                self.cols.setdefault(j, {})[i] = v

    def set(self, i: int, j: int, v: int) -> None:
        if v:
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, {})[i] = v
        else:
            row = self.rows.get(i)
            if row is not None and j in row:
                del row[j]
                if not row:
                    del self.rows[i]
            col = self.cols.get(j)
            if col is not None and i in col:
                del col[i]
                if not col:
                    del self.cols[j]

    def get(self, i: int, j: int) -> int:
        return self.rows.get(i, {}).get(j, 0)

    def add_row(self, target: int, source: int, q: int) -> None:
        for j, v in list(self.rows.get(source, {}).items()):
            self.set(target, j, self.get(target, j) + q * v)

    def add_col(self, target: int, source: int, q: int) -> None:
        for i, v in list(self.cols.get(source, {}).items()):
            self.set(i, target, self.get(i, target) + q * v)

    def min_entry(self) -> tuple[int, int]:
        best: tuple[int, int, int] | None = None
        for i, row in self.rows.items():
            for j, v in row.items():
                a = abs(v)
                if best is None or a < best[0]:
                    best = (a, i, j)
                    if a == 1:
                        return i, j
        assert best is not None
        return best[1], best[2]

    def drop(self, i: int, j: int) -> None:
        self.set(i, j, 0)


def smith_reduce(m: SparseIntMatrix) -> SmithReduction:
    """Diagonalize m by unimodular row/column operations."""
    work = _Workspace(m)
    reduction = SmithReduction(m.shape)
    while work.rows:
        r, c = work.min_entry()
        while True:
            p = work.get(r, c)
            clean = True
            for i, v in list(work.cols.get(c, {}).items()):
                if i == r:
                    continue
                q = v // p
                if q:
                    work.add_row(i, r, -q)
                    reduction.row_ops.append((i, r, -q))
                if work.get(i, c):
                    clean = False
            for j, v in list(work.rows.get(r, {}).items()):
                if j == c:
                    continue
                q = v // p
                if q:
                    work.add_col(j, c, -q)
                if work.get(r, j):
                    clean = False
            if clean:
                break
            candidates = [(abs(v), i, c) for i, v in work.cols.get(c, {}).items() if i != r]
            candidates += [(abs(v), r, j) for j, v in work.rows.get(r, {}).items() if j != c]
            _, r, c = min(candidates)
        reduction.pivots[r] = work.get(r, c)
        work.drop(r, c)
    return reduction


def smith_normal_form(m: SparseIntMatrix | Sequence[Sequence[int]]) -> SnfResult:
    """Invariant factors and rank of an integer matrix."""
    if not isinstance(m, SparseIntMatrix):
        m = SparseIntMatrix.from_dense(m)
    return smith_reduce(m).result


def rank(m: SparseIntMatrix) -> int:
    """Rank over the rationals."""
    if m.is_zero():
        return 0
    data = {i: {j: QQ(v) for j, v in row.items()} for i, row in m.rows.items()}
    return DomainMatrix(data, m.shape, QQ).rank()
