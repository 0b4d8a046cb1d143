"""Sparse exact linear algebra over F_p.

Matrices are stored column-wise as ``{row: value}`` dicts with values in
``1..p-1``; this matches how bar differentials are produced (one column per
source basis element).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

SparseVector = dict[int, int]


def reduce_vector(v: Mapping[int, int], p: int) -> SparseVector:
    return {i: c % p for i, c in v.items() if c % p}


def rank_mod_p(vectors: Iterable[Mapping[int, int]], p: int) -> int:
    """Rank of the span of sparse vectors over F_p.

    Incremental elimination: each incoming vector is reduced against the
    pivots found so far (pivot = smallest index), and becomes a new pivot if
    anything is left.
    """
    pivots: dict[int, SparseVector] = {}
    for vec in vectors:
        v = reduce_vector(vec, p)
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {i: (c * inv) % p for i, c in v.items()}
                break
            f = v[lead]
            for i, c in piv.items():
                x = (v.get(i, 0) - f * c) % p
                if x:
                    v[i] = x
                else:
                    v.pop(i, None)
    return len(pivots)


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    p: int
    columns: list[SparseVector] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.columns:
            self.columns = [{} for _ in range(self.ncols)]
        if len(self.columns) != self.ncols:
            raise ValueError("column count does not match ncols")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def rank(self) -> int:
        return rank_mod_p(self.columns, self.p)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def apply(self, v: Mapping[int, int]) -> SparseVector:
        out: SparseVector = {}
        for j, a in v.items():
            for i, c in self.columns[j].items():
                out[i] = (out.get(i, 0) + a * c) % self.p
        return {i: c for i, c in out.items() if c}

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseMatrix(self.nrows, other.ncols, self.p, [self.apply(c) for c in other.columns])

    def to_dense(self) -> list[list[int]]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                rows[i][j] = c
        return rows
