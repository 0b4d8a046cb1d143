"""TAQ bases over the sphere, stabilization of the THH tower, and derived checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import DimTable, GeneratorKind, InvariantError, check_prime
from .tor import TowerFamily, generators_in_degree, tower_stages
from .words import (
    TAQ_FP,
    TAQ_Z,
    TAQ_ZPM_EXTRA,
    AdmissibleSequence,
    ExpandedLetter,
    ExpandedWord,
    Letter,
    Word,
    build_expanded,
    compress_word,
    enumerate_sequences,
    gamma,
    lie,
    word_kind,
)


class Target(enum.Enum):
    FP = "fp"
    Z = "z"
    ZPM = "zpm"


@dataclass(frozen=True)
class BasisElement:
    degree: int
    sequence: AdmissibleSequence
    word: Word | None = None
    kind: GeneratorKind | None = None

    def row(self) -> dict:
        return {
            "degree": self.degree,
            "sequence": list(self.sequence.entries),
            "word": self.word.render() if self.word is not None else None,
            "kind": self.kind.value if self.kind is not None else None,
        }


@dataclass(frozen=True)
class BasisTable:
    table: DimTable
    basis: tuple[BasisElement, ...] = ()
    notes: tuple[str, ...] = ()

    def __getitem__(self, degree: int) -> int:
        return self.table[degree]


def _relabel(expanded: list[ExpandedLetter], terminal: Letter, divided: bool) -> Word:
    """Compress a right-to-left expanded word whose ``mu`` core stands in for ``terminal``."""
    body = list(reversed(expanded))[:-1]
    g = 0
    while divided and body and body[-1] is ExpandedLetter.GAMMA_P:
        body.pop()
        g += 1
    head = list(compress_word(ExpandedWord(tuple(body))).letters) if body else []
    return Word(tuple(head + ([gamma(g)] if g else []) + [terminal]))


def representative(seq: AdmissibleSequence, p: int) -> tuple[Word, int, int]:
    """Shortest stable word carrying ``seq``: ``(word, word_degree, stage n)``.

    TAQ(HF_p) words end in sigma mu.  For HZ the a_0 = 1 classes come from the
    x_{2p} chain and a_0 = 0 from the y_{2p-2} chain (which sits one stage
    higher); the extra Z/p^m classes come from the divided-power chain on mu.
    Representatives are taken at stage n >= 2.
    """
    fam = seq.family
    core = [ExpandedLetter.MU]
    if fam == TAQ_FP:
        letters, deg, size = build_expanded([ExpandedLetter.SIGMA, ExpandedLetter.MU], 3, False, seq.entries, p)
        return compress_word(ExpandedWord(tuple(reversed(letters)))), deg, size
    if fam == TAQ_Z:
        if seq.a0 == 1:
            term, tdeg, offset = Letter("x"), 2 * p, 0
        else:
            term, tdeg, offset = Letter("y"), 2 * p - 2, 1
        letters, deg, size = build_expanded(core, tdeg, False, seq.tail, p)
        if size - offset < 2:
            letters, deg, size = build_expanded(core, tdeg, False, seq.tail, p, length=2 + offset)
        return _relabel(letters, term, divided=False), deg, size - offset
    if fam == TAQ_ZPM_EXTRA:
        letters, deg, size = build_expanded(core, 2, True, seq.entries, p)
        if size < 2:
            letters, deg, size = build_expanded(core, 2, True, seq.entries, p, length=2)
        return _relabel(letters, Letter("mu"), divided=True), deg, size
    raise ValueError(f"no representatives for family {fam.render()}")


def _basis(family, p: int, cutoff: int) -> list[BasisElement]:
    out = []
    for seq, deg in enumerate_sequences(family, p, cutoff):
        word, wdeg, _ = representative(seq, p)
        out.append(BasisElement(deg, seq, word, word_kind(wdeg)))
    return out


def taq_dims(target: Target | str, p: int, cutoff: int) -> BasisTable:
    """F_p-dimensions (with basis) of TAQ_*(R, S; HF_p) for R = HF_p, HZ, HZ/p^m."""
    check_prime(p)
    target = Target(target)
    if target is Target.FP:
        basis = _basis(TAQ_FP, p, cutoff)
    elif target is Target.Z:
        basis = _basis(TAQ_Z, p, cutoff)
    else:
        basis = _basis(TAQ_Z, p, cutoff) + _basis(TAQ_ZPM_EXTRA, p, cutoff)
        basis.sort(key=lambda b: (b.degree, b.sequence.family.tag.value, b.sequence.entries))
    dims: dict[int, int] = {}
    for b in basis:
        dims[b.degree] = dims.get(b.degree, 0) + 1
    notes = ("representative words are taken at the smallest stage where the excess bound holds",)
    return BasisTable(DimTable(cutoff, dims), tuple(basis), notes)


def extra_dims(p: int, cutoff: int) -> DimTable:
    dims: dict[int, int] = {}
    for _, deg in enumerate_sequences(TAQ_ZPM_EXTRA, p, cutoff):
        dims[deg] = dims.get(deg, 0) + 1
    return DimTable(cutoff, dims)


@dataclass(frozen=True)
class StabilizationReport:
    p: int
    degree: int
    counts: dict[int, int]
    expanded_counts: dict[int, int]
    expected: int
    stable_from: int

    @property
    def final(self) -> int:
        return self.counts[max(self.counts)]

    @property
    def ok(self) -> bool:
        # constant over at least the last two stages and equal to the TAQ rank
        return self.final == self.expected and self.stable_from < max(self.counts)


def stable_counts(p: int, max_shift: int, n_max: int) -> tuple[dict[int, dict[int, int]], dict[int, dict[int, int]]]:
    """Generator counts of B^n in degree d + n, for 1 ≤ d ≤ max_shift and 2 ≤ n ≤ n_max.

    Returns ``(word_level, expanded)`` as ``{d: {n: count}}``.
    """
    check_prime(p)
    word_level: dict[int, dict[int, int]] = {d: {} for d in range(1, max_shift + 1)}
    expanded: dict[int, dict[int, int]] = {d: {} for d in range(1, max_shift + 1)}
    for n, alg in tower_stages(TowerFamily.THH_FP, p, n_max, n_max + max_shift):
        if n < 2:
            continue
        for d in range(1, max_shift + 1):
            word_level[d][n] = len(generators_in_degree(alg, d + n))
            expanded[d][n] = len(generators_in_degree(alg, d + n, expanded=True))
    return word_level, expanded


def _stable_from(counts: dict[int, int]) -> int:
    ns = sorted(counts)
    start = ns[-1]
    for n in reversed(ns):
        if counts[n] != counts[ns[-1]]:
            break
        start = n
    return start


def stabilization_check(p: int, degree: int, n_max: int | None = None) -> StabilizationReport:
    """Count indecomposables of B^n in degree ``degree + n`` as n grows."""
    check_prime(p)
    if degree < 1:
        raise ValueError("degree must be >= 1")
    n_max = degree + p * degree if n_max is None else n_max
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    word_level, expanded = stable_counts(p, degree, n_max)
    counts = word_level[degree]
    expected = taq_dims(Target.FP, p, degree)[degree]
    return StabilizationReport(p, degree, counts, expanded[degree], expected, _stable_from(counts))


def lie_dims(p: int, ell: int, cutoff: int) -> DimTable:
    """Ranks of π_* of the free spectral partition Lie algebra on Σ^ℓ F_p."""
    check_prime(p)
    if ell % 2 == 0:
        raise ValueError(f"ℓ must be odd, got {ell}")
    dims: dict[int, int] = {}
    for _, deg in enumerate_sequences(lie(ell), p, cutoff):
        dims[deg] = dims.get(deg, 0) + 1
    return DimTable(cutoff, dims)


@dataclass(frozen=True)
class LieCrossCheck:
    p: int
    cutoff: int
    mismatches: tuple[tuple[int, int, int], ...]
    unmatched: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unmatched


def crosscheck_lie(p: int, cutoff: int) -> LieCrossCheck:
    """Compare TAQ_d(HF_p) with π_{-2-d} of the Lie algebra on Σ^{-3} F_p.

    Besides the degreewise ranks, each TAQ sequence (a_1..a_k) is sent to
    (1-a_k, ..., 1-a_1) and checked to be an admissible Lie index of the
    matching degree.
    """
    check_prime(p)
    taq = taq_dims(Target.FP, p, cutoff)
    lie_table = lie_dims(p, -3, cutoff + 2)
    bad = tuple(
        (d, taq[d], lie_table[-2 - d]) for d in range(0, cutoff + 1) if taq[d] != lie_table[-2 - d]
    )
    fam = lie(-3)
    unmatched = []
    for b in taq.basis:
        image = AdmissibleSequence(fam, tuple(1 - a for a in reversed(b.sequence.entries)))
        if image.violations(p) or image.degree(p) != -2 - b.degree:
            unmatched.append(b.sequence.entries)
    return LieCrossCheck(p, cutoff, bad, tuple(unmatched))


@dataclass(frozen=True)
class TorsionRankTable:
    p: int
    cutoff: int
    ranks: dict[int, int]
    notes: tuple[str, ...] = ()

    def __getitem__(self, n: int) -> int:
        if n > self.cutoff:
            raise KeyError(f"degree {n} is outside the cutoff {self.cutoff}")
        return self.ranks.get(n, 0)


def torsion_ranks(p: int, cutoff: int) -> TorsionRankTable:
    """Ranks of the p-power torsion of TAQ_n(HZ, S) via rk T_n = rk t_n - rk T_{n-1}."""
    check_prime(p)
    t = taq_dims(Target.Z, p, cutoff).table
    ranks: dict[int, int] = {}
    prev = 0
    for n in range(0, cutoff + 1):
        r = t[n] - prev
        if r < 0:
            raise InvariantError(f"negative torsion rank {r} in degree {n} (p = {p})")
        if r:
            ranks[n] = r
        prev = r
    notes = ("assumes T_n = 0 below the first nonzero t_n (the groups are finite and rationally trivial)",)
    return TorsionRankTable(p, cutoff, ranks, notes)
