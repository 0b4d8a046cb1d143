"""Brute-force Tor^A(F_p, F_p) through the reduced bar complex.

The chain group B_{s,t} has basis the s-tuples ``[a_1|...|a_s]`` of
positive-degree basis elements with internal degree sum ``t``; a class in
B_{s,t} has total degree ``s + t``.  The differential multiplies adjacent
letters:

    d[a_1|...|a_s] = sum_i (-1)^(i + |a_1| + ... + |a_i|) [a_1|...|a_i a_{i+1}|...|a_s]

Every computed pair of consecutive differentials is checked for d∘d = 0, so
a convention error cannot slip through silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .core import (
    DimTable,
    FreeGCAlgebra,
    GradedAlgebraPresentation,
    InvariantError,
    hilbert_series,
    presentation_from_free,
)
from .modp import SparseMatrix


@dataclass(frozen=True)
class BarBidegreeTable:
    cutoff: int
    dims: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, st: tuple[int, int]) -> int:
        s, t = st
        if t > self.cutoff:
            raise KeyError(f"internal degree {t} is outside the cutoff {self.cutoff}")
        return self.dims.get((s, t), 0)

    def total(self, cutoff: int | None = None) -> DimTable:
        cutoff = self.cutoff if cutoff is None else cutoff
        out: dict[int, int] = {}
        for (s, t), r in self.dims.items():
            if s + t <= cutoff:
                out[s + t] = out.get(s + t, 0) + r
        return DimTable(cutoff, out)


@dataclass(frozen=True)
class TorResult:
    bidegrees: BarBidegreeTable
    total: DimTable
    chain_dims: Mapping[tuple[int, int], int]
    ranks: Mapping[tuple[int, int], int]


class BarComplex:
    """Lazily built reduced bar complex of a presentation."""

    def __init__(self, pres: GradedAlgebraPresentation):
        self.pres = pres
        self._tuples: dict[int, dict[int, list[tuple[int, ...]]]] = {}
        self._diffs: dict[tuple[int, int], SparseMatrix] = {}

    @cached_property
    def _by_degree(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, d in enumerate(self.pres.degrees):
            if d > 0:
                out.setdefault(d, []).append(i)
        return out

    def _compositions(self, t: int) -> dict[int, list[tuple[int, ...]]]:
        """All bar words of internal degree ``t``, grouped by length."""
        if t in self._tuples:
            return self._tuples[t]
        if t == 0:
            res = {0: [()]}
        else:
            res: dict[int, list[tuple[int, ...]]] = {}
            for d, idxs in self._by_degree.items():
                if d > t:
                    continue
                for s, tails in self._compositions(t - d).items():
                    bucket = res.setdefault(s + 1, [])
                    for i in idxs:
                        bucket.extend((i,) + tail for tail in tails)
            for bucket in res.values():
                bucket.sort()
        self._tuples[t] = res
        return res

    def basis(self, s: int, t: int) -> list[tuple[int, ...]]:
        if t > self.pres.cutoff:
            raise ValueError(f"internal degree {t} exceeds presentation cutoff {self.pres.cutoff}")
        return self._compositions(t).get(s, [])

    def differential(self, s: int, t: int) -> SparseMatrix:
        """Matrix of d: B_{s,t} -> B_{s-1,t}."""
        if s < 1:
            raise ValueError("the bar differential starts at s = 1")
        key = (s, t)
        if key in self._diffs:
            return self._diffs[key]
        pres, p = self.pres, self.pres.p
        src = self.basis(s, t)
        tgt = self.basis(s - 1, t)
        where = {w: k for k, w in enumerate(tgt)}
        cols = []
        for w in src:
            col: dict[int, int] = {}
            eps = 0
            for i in range(s - 1):
                eps += 1 + pres.degrees[w[i]]
                sign = -1 if eps % 2 else 1
                for k, c in pres.multiply(w[i], w[i + 1]).items():
                    if pres.degrees[k] == 0:
                        continue
                    image = w[:i] + (k,) + w[i + 2 :]
                    row = where[image]
                    col[row] = (col.get(row, 0) + sign * c) % p
            cols.append({r: c for r, c in col.items() if c})
        mat = SparseMatrix(len(tgt), len(src), p, cols)
        self._diffs[key] = mat
        return mat

    def check_square_zero(self, s: int, t: int) -> None:
        if s < 2:
            return
        if not (self.differential(s - 1, t) @ self.differential(s, t)).is_zero():
            raise InvariantError(f"d∘d ≠ 0 on B_({s},{t}); bar sign convention is broken")


def bar_differential(pres: GradedAlgebraPresentation, s: int, t: int) -> SparseMatrix:
    if t > pres.cutoff:
        raise ValueError(f"internal degree {t} exceeds presentation cutoff {pres.cutoff}")
    return BarComplex(pres).differential(s, t)


def tor_dims(pres: GradedAlgebraPresentation, cutoff: int | None = None) -> TorResult:
    """Bidegree ranks of Tor^A(F_p, F_p) for every internal degree ``t <= cutoff``.

    The total-degree table (``s + t``) is exact through ``cutoff`` as well.
    """
    cutoff = pres.cutoff if cutoff is None else cutoff
    if cutoff > pres.cutoff:
        raise ValueError(f"cutoff {cutoff} exceeds presentation cutoff {pres.cutoff}")
    bar = BarComplex(pres)
    homology: dict[tuple[int, int], int] = {}
    chain: dict[tuple[int, int], int] = {}
    ranks: dict[tuple[int, int], int] = {}
    for t in range(cutoff + 1):
        lengths = bar._compositions(t)
        top = max(lengths) if lengths else 0
        for s in range(1, top + 1):
            ranks[(s, t)] = bar.differential(s, t).rank()
            bar.check_square_zero(s, t)
        for s in range(0, top + 1):
            dim = len(bar.basis(s, t))
            chain[(s, t)] = dim
            h = dim - ranks.get((s, t), 0) - ranks.get((s + 1, t), 0)
            if h < 0:
                raise InvariantError(f"negative homology rank at ({s},{t})")
            if h:
                homology[(s, t)] = h
    table = BarBidegreeTable(cutoff, homology)
    return TorResult(table, table.total(cutoff), chain, ranks)


@dataclass(frozen=True)
class VerifyReport:
    name: str
    cutoff: int
    oracle: DimTable
    rule: DimTable
    mismatches: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_rule(alg: FreeGCAlgebra, cutoff: int) -> VerifyReport:
    """Compare the bar oracle with the closed-form Tor rules through ``cutoff``."""
    from .tor import tor_of_free

    oracle = tor_dims(presentation_from_free(alg, cutoff), cutoff).total
    rule = hilbert_series(tor_of_free(alg, cutoff), cutoff)
    bad = tuple(
        (d, oracle[d], rule[d]) for d in range(cutoff + 1) if oracle[d] != rule[d]
    )
    return VerifyReport(alg.describe(), cutoff, oracle, rule, bad)
