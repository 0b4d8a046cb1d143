"""Admissible words, admissible sequences, and Cartan's bijection between them.

Words are read left to right and built right to left.  A THH word ends in
``mu``; an Eilenberg-MacLane word has no ``mu`` and ends in ``sigma`` or
``phi^k`` (the generators of H_*K(Z/p,1) and their divided powers).

Adjacency rules (the letter on the left of ...):

* ``mu``: must be ``sigma``;
* ``sigma``: must be ``rho^k``;
* ``rho^k`` or ``phi^k``: must be ``sigma`` or ``phi^l``.

Degrees: ``deg(mu) = 2``, ``deg(sigma x) = 1 + deg x``,
``deg(rho^k x) = p^k (1 + deg x)``, ``deg(phi^k x) = p^k (2 + p deg x)``, with
an empty tail of degree 0 for EM words.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import GeneratorKind, check_prime

ALPHABET = ("mu", "sigma", "rho", "phi")


@dataclass(frozen=True, order=True)
class Letter:
    name: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.name in ("rho", "phi", "gamma") and (self.k is None or self.k < 0):
            raise ValueError(f"{self.name} needs a nonnegative index, got {self.k}")
        if self.name in ("mu", "sigma") and self.k is not None:
            raise ValueError(f"{self.name} takes no index")

    def render(self) -> str:
        return self.name if self.k is None else f"{self.name}^{self.k}"

    @classmethod
    def parse(cls, token: str) -> Letter:
        if "^" in token:
            name, k = token.split("^", 1)
            return cls(name, int(k))
        return cls(token)


MU = Letter("mu")
SIGMA = Letter("sigma")


def rho(k: int) -> Letter:
    return Letter("rho", k)


def phi(k: int) -> Letter:
    return Letter("phi", k)


def gamma(k: int) -> Letter:
    return Letter("gamma", k)


@dataclass(frozen=True, order=True)
class Word:
    """A sequence of letters.  Also used as a generator label for any tower."""

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("words are nonempty")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def render(self) -> str:
        return " ".join(x.render() for x in self.letters)

    __str__ = render

    @classmethod
    def parse(cls, text: str) -> Word:
        return cls(tuple(Letter.parse(tok) for tok in text.split()))

    @property
    def first(self) -> Letter:
        return self.letters[0]

    def prefixed(self, letter: Letter) -> Word:
        return Word((letter,) + self.letters)

    def divided_power(self, e: int) -> Word:
        """Label of gamma_{p^e} applied to this word."""
        head = self.letters[0]
        if e == 0:
            return self
        if head.name in ("rho", "phi") and head.k == 0:
            return Word((Letter(head.name, e),) + self.letters[1:])
        return self.prefixed(gamma(e))


class Context(enum.Enum):
    THH = "thh"
    EM = "em"


def context_of(w: Word) -> Context:
    return Context.THH if w.letters[-1] == MU else Context.EM


def admissibility_violations(w: Word) -> list[str]:
    """Reasons ``w`` fails to be admissible (empty list if admissible)."""
    bad = []
    for x in w.letters:
        if x.name not in ALPHABET:
            bad.append(f"letter {x.render()} is outside the alphabet")
    if bad:
        return bad
    last = w.letters[-1]
    if last.name == "rho":
        bad.append("a word cannot end in rho^k")
    if MU in w.letters[:-1]:
        bad.append("mu may only appear as the last letter")
    for left, right in zip(w.letters, w.letters[1:]):
        if right == MU and left != SIGMA:
            bad.append(f"mu is preceded by {left.render()}, not sigma")
        elif right == SIGMA and left.name != "rho":
            bad.append(f"sigma is preceded by {left.render()}, not rho^k")
        elif right.name in ("rho", "phi") and not (left == SIGMA or left.name == "phi"):
            bad.append(f"{right.render()} is preceded by {left.render()}, not sigma or phi^l")
    return bad


def is_admissible(w: Word) -> bool:
    return not admissibility_violations(w)


def _require_admissible(w: Word) -> None:
    bad = admissibility_violations(w)
    if bad:
        raise ValueError(f"inadmissible word {w.render()!r}: {'; '.join(bad)}")


def _prepend_degree(letter: Letter, tail: int, p: int) -> int:
    if letter.name == "mu":
        return 2
    if letter.name == "sigma":
        return 1 + tail
    if letter.name == "rho":
        return p**letter.k * (1 + tail)
    if letter.name == "phi":
        return p**letter.k * (2 + p * tail)
    raise ValueError(f"no degree rule for letter {letter.render()}")


def word_degree(w: Word, p: int) -> int:
    check_prime(p)
    _require_admissible(w)
    deg = 0
    for x in reversed(w.letters):
        deg = _prepend_degree(x, deg, p)
    return deg


def is_stable(w: Word) -> bool:
    x = w.first
    return x in (MU, SIGMA) or (x.name in ("rho", "phi") and x.k == 0)


def word_kind(degree: int) -> GeneratorKind:
    return GeneratorKind.EXTERIOR if degree % 2 else GeneratorKind.DIVIDED_POWER


def enumerate_stable_words(
    p: int, length: int, max_degree: int, context: Context | str = Context.THH
) -> list[tuple[Word, int, GeneratorKind]]:
    """Every stable admissible word with ``length`` letters and degree ≤ max_degree."""
    check_prime(p)
    context = Context(context)
    if context is Context.THH and length < 2:
        raise ValueError("THH words are enumerated from length 2")
    if length < 1:
        raise ValueError("length must be >= 1")

    seeds: list[tuple[tuple[Letter, ...], int]] = []
    if context is Context.THH:
        seeds.append(((MU,), 2))
    else:
        if max_degree >= 1:
            seeds.append(((SIGMA,), 1))
        k = 0
        while 2 * p**k <= max_degree:
            seeds.append(((phi(k),), 2 * p**k))
            k += 1

    out: list[tuple[Word, int, GeneratorKind]] = []

    def options(head: Letter, deg: int) -> Iterator[tuple[Letter, int]]:
        if head == MU:
            names = ["sigma"]
        elif head == SIGMA:
            names = ["rho"]
        else:
            names = ["sigma", "phi"]
        for name in names:
            if name == "sigma":
                d = 1 + deg
                if d <= max_degree:
                    yield SIGMA, d
                continue
            k = 0
            while (d := _prepend_degree(Letter(name, k), deg, p)) <= max_degree:
                yield Letter(name, k), d
                k += 1

    def grow(letters: tuple[Letter, ...], deg: int) -> None:
        if len(letters) == length:
            w = Word(letters)
            if is_stable(w):
                out.append((w, deg, word_kind(deg)))
            return
        for x, d in options(letters[0], deg):
            grow((x,) + letters, d)

    for letters, deg in seeds:
        if deg <= max_degree:
            grow(letters, deg)
    out.sort(key=lambda r: (r[1], r[0].render()))
    return out


class ExpandedLetter(enum.Enum):
    MU = "mu"
    SIGMA = "sigma"
    RHO0 = "rho^0"
    PHI0 = "phi^0"
    GAMMA_P = "gamma_p"


@dataclass(frozen=True)
class ExpandedWord:
    """A word with every ``rho^k``/``phi^k`` written as ``gamma_p^k rho^0``/``gamma_p^k phi^0``."""

    letters: tuple[ExpandedLetter, ...]

    def render(self) -> str:
        return " ".join(x.value for x in self.letters)


def expand_word(w: Word) -> ExpandedWord:
    out: list[ExpandedLetter] = []
    for x in w.letters:
        if x == MU:
            out.append(ExpandedLetter.MU)
        elif x == SIGMA:
            out.append(ExpandedLetter.SIGMA)
        elif x.name in ("rho", "phi"):
            out.extend([ExpandedLetter.GAMMA_P] * x.k)
            out.append(ExpandedLetter.RHO0 if x.name == "rho" else ExpandedLetter.PHI0)
        else:
            raise ValueError(f"cannot expand letter {x.render()}")
    return ExpandedWord(tuple(out))


def compress_word(e: ExpandedWord) -> Word:
    out: list[Letter] = []
    pending = 0
    for x in e.letters:
        if x is ExpandedLetter.GAMMA_P:
            pending += 1
            continue
        if x is ExpandedLetter.RHO0:
            out.append(rho(pending))
        elif x is ExpandedLetter.PHI0:
            out.append(phi(pending))
        else:
            if pending:
                raise ValueError("gamma_p must be followed by rho^0, phi^0 or gamma_p")
            out.append(MU if x is ExpandedLetter.MU else SIGMA)
        pending = 0
    if pending:
        raise ValueError("a trailing gamma_p has nothing to act on")
    return Word(tuple(out))


def _expanded_degree(letter: ExpandedLetter, tail: int, p: int) -> int:
    if letter is ExpandedLetter.MU:
        return 2
    if letter in (ExpandedLetter.SIGMA, ExpandedLetter.RHO0):
        return 1 + tail
    if letter is ExpandedLetter.PHI0:
        return 2 + p * tail
    return p * tail


# ---------------------------------------------------------------- sequences


class FamilyTag(enum.Enum):
    EM_SPACE = "em_space"
    DUAL_STEENROD = "dual_steenrod"
    THH_FP = "thh_fp"
    TAQ_FP = "taq_fp"
    TAQ_Z = "taq_z"
    TAQ_ZPM_EXTRA = "taq_zpm_extra"
    LIE = "lie"


_HAS_A0 = {FamilyTag.EM_SPACE, FamilyTag.DUAL_STEENROD, FamilyTag.TAQ_Z}
_HAS_ORDER = {FamilyTag.EM_SPACE, FamilyTag.THH_FP}


@dataclass(frozen=True)
class SequenceFamily:
    """Which admissibility conditions and degree formula apply.

    ``param`` is the order n for ``EM_SPACE``/``THH_FP`` and the suspension
    ℓ for ``LIE``.
    """

    tag: FamilyTag
    param: int | None = None

    def __post_init__(self) -> None:
        if self.tag in _HAS_ORDER and (self.param is None or self.param < 1):
            raise ValueError(f"{self.tag.value} needs an order n >= 1")
        if self.tag is FamilyTag.LIE and self.param is None:
            raise ValueError("the Lie family needs an integer ℓ")
        if self.tag not in _HAS_ORDER and self.tag is not FamilyTag.LIE and self.param is not None:
            raise ValueError(f"{self.tag.value} takes no parameter")

    @property
    def has_a0(self) -> bool:
        return self.tag in _HAS_A0

    @property
    def has_excess(self) -> bool:
        return self.tag in _HAS_ORDER

    def head_bound(self, p: int, a0: int = 0) -> int:
        """Lower bound on the first entry after a_0."""
        return {
            FamilyTag.EM_SPACE: 2 * p - 2,
            FamilyTag.DUAL_STEENROD: 2 * p - 2,
            FamilyTag.THH_FP: 4 * (p - 1),
            FamilyTag.TAQ_FP: 4 * (p - 1),
            FamilyTag.TAQ_Z: 2 * (p + a0) * (p - 1),
            FamilyTag.TAQ_ZPM_EXTRA: 2 * (p - 1),
        }[self.tag]

    def size(self, entries: Sequence[int], p: int) -> int:
        """The ``|I|`` of a sequence (a_0 included when the family carries it)."""
        base = {
            FamilyTag.EM_SPACE: 0,
            FamilyTag.DUAL_STEENROD: 0,
            FamilyTag.THH_FP: 1,
            FamilyTag.TAQ_FP: 1,
            FamilyTag.TAQ_Z: 2 * p,
            FamilyTag.TAQ_ZPM_EXTRA: 1,
        }[self.tag]
        return base + sum(entries)

    def degree(self, entries: Sequence[int], p: int) -> int:
        if self.tag is FamilyTag.LIE:
            return self.param + sum(entries) - len(entries)
        n = self.param if self.has_excess else 0
        return n + self.size(entries, p)

    def render(self) -> str:
        return self.tag.value if self.param is None else f"{self.tag.value}({self.param})"


def em_space(n: int) -> SequenceFamily:
    return SequenceFamily(FamilyTag.EM_SPACE, n)


def thh_fp(n: int) -> SequenceFamily:
    return SequenceFamily(FamilyTag.THH_FP, n)


def lie(ell: int) -> SequenceFamily:
    return SequenceFamily(FamilyTag.LIE, ell)


DUAL_STEENROD = SequenceFamily(FamilyTag.DUAL_STEENROD)
TAQ_FP = SequenceFamily(FamilyTag.TAQ_FP)
TAQ_Z = SequenceFamily(FamilyTag.TAQ_Z)
TAQ_ZPM_EXTRA = SequenceFamily(FamilyTag.TAQ_ZPM_EXTRA)


@dataclass(frozen=True)
class AdmissibleSequence:
    """An index sequence.  Families with a_0 always store it as ``entries[0]``."""

    family: SequenceFamily
    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        entries = tuple(int(a) for a in self.entries)
        if self.family.has_a0 and not entries:
            entries = (0,)
        object.__setattr__(self, "entries", entries)

    @property
    def a0(self) -> int | None:
        return self.entries[0] if self.family.has_a0 else None

    @property
    def tail(self) -> tuple[int, ...]:
        """Entries after a_0 (all entries for families without a_0)."""
        return self.entries[1:] if self.family.has_a0 else self.entries

    def size(self, p: int) -> int:
        return self.family.size(self.entries, p)

    def degree(self, p: int) -> int:
        return self.family.degree(self.entries, p)

    def excess_holds(self, p: int, n: int | None = None) -> bool:
        """``p·a_k < (p-1)(n + |I|)``; vacuous for an empty sequence."""
        n = self.family.param if n is None else n
        if not self.entries:
            return True
        return p * self.entries[-1] < (p - 1) * (n + self.size(p))

    def violations(self, p: int) -> list[str]:
        check_prime(p)
        fam = self.family
        if fam.tag is FamilyTag.LIE:
            return _lie_violations(self.entries, p, fam.param)
        bad = []
        m = 2 * p - 2
        if fam.has_a0 and self.entries[0] not in (0, 1):
            bad.append(f"a_0 = {self.entries[0]} is not 0 or 1")
        tail = self.tail
        for i, a in enumerate(tail, start=1):
            if a % m not in (0, 1):
                bad.append(f"a_{i} = {a} is not 0 or 1 mod {m}")
        if tail and tail[0] < fam.head_bound(p, self.a0 or 0):
            bad.append(f"a_1 = {tail[0]} is below {fam.head_bound(p, self.a0 or 0)}")
        for i, (a, b) in enumerate(zip(tail, tail[1:]), start=1):
            if b < p * a:
                bad.append(f"a_{i + 1} = {b} < p·a_{i} = {p * a}")
        if fam.has_excess and not self.excess_holds(p):
            bad.append(f"excess fails: {p}·{self.entries[-1]} >= {p - 1}·{fam.param + self.size(p)}")
        return bad

    def is_admissible(self, p: int) -> bool:
        return not self.violations(p)


def _lie_violations(entries: Sequence[int], p: int, ell: int) -> list[str]:
    bad = []
    m = 2 * (p - 1)
    for j, i in enumerate(entries, start=1):
        if i % m not in (0, 1):
            bad.append(f"i_{j} = {i} is not 0 or 1 mod {m}")
    for j, (a, b) in enumerate(zip(entries, entries[1:]), start=1):
        if not a < p * b:
            bad.append(f"i_{j} = {a} is not < p·i_{j + 1} = {p * b}")
    if entries and entries[-1] > (p - 1) * ell:
        bad.append(f"i_k = {entries[-1]} exceeds (p-1)ℓ = {(p - 1) * ell}")
    return bad


def _sort_key(pair: tuple[AdmissibleSequence, int]) -> tuple:
    seq, deg = pair
    return (deg, len(seq.entries), seq.entries)


def _tails(first_min: int, p: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Tuples ``(a_1, ..., a_k)`` with ``a_1 >= first_min``, entries ≡ 0, 1 mod 2p-2,
    ``a_{i+1} >= p·a_i``, and ``sum <= budget``."""
    m = 2 * p - 2

    def rec(start: int, remaining: int) -> Iterator[tuple[int, ...]]:
        a = start - start % m
        while a <= remaining:
            for x in (a, a + 1):
                if start <= x <= remaining:
                    yield (x,)
                    for rest in rec(p * x, remaining - x):
                        yield (x,) + rest
            a += m

    yield ()
    yield from rec(first_min, budget)


def enumerate_sequences(
    family: SequenceFamily, p: int, max_degree: int
) -> list[tuple[AdmissibleSequence, int]]:
    """All admissible sequences of the family with degree ≤ max_degree.

    For the Lie family the bound is ``|degree| <= max_degree``.  Ordered by
    (degree, length, entries).
    """
    check_prime(p)
    if family.tag is FamilyTag.LIE:
        return _enumerate_lie(p, family.param, max_degree)
    out: list[tuple[AdmissibleSequence, int]] = []
    a0_values = (0, 1) if family.has_a0 else (None,)
    for a0 in a0_values:
        prefix = () if a0 is None else (a0,)
        base = family.degree(prefix, p)
        if base > max_degree:
            continue
        for tail in _tails(family.head_bound(p, a0 or 0), p, max_degree - base):
            seq = AdmissibleSequence(family, prefix + tail)
            if family.has_excess and not seq.excess_holds(p):
                continue
            out.append((seq, seq.degree(p)))
    out.sort(key=_sort_key)
    return out


def _enumerate_lie(p: int, ell: int, max_degree: int) -> list[tuple[AdmissibleSequence, int]]:
    if ell % 2 == 0:
        raise ValueError(f"ℓ must be odd for odd p, got {ell}")
    if ell >= 0:
        raise ValueError("Lie enumeration only terminates for negative ℓ")
    fam = lie(ell)
    m = 2 * (p - 1)
    floor = -max_degree
    out: list[tuple[AdmissibleSequence, int]] = []
    if abs(ell) <= max_degree:
        out.append((AdmissibleSequence(fam, ()), ell))

    def candidates(upper: int, deg_so_far: int) -> Iterator[int]:
        # entries ≡ 0, 1 mod m, at most ``upper``, with the degree staying in range
        i = upper
        while deg_so_far + i - 1 >= floor:
            if i % m in (0, 1):
                yield i
            i -= 1

    def rec(entries: tuple[int, ...], deg: int) -> None:
        # ``entries`` runs i_j, ..., i_k; extend on the left by i_{j-1} < p·i_j
        for i in candidates(p * entries[0] - 1, deg):
            new = (i,) + entries
            out.append((AdmissibleSequence(fam, new), deg + i - 1))
            rec(new, deg + i - 1)

    for last in candidates((p - 1) * ell, ell):
        entries = (last,)
        deg = ell + last - 1
        out.append((AdmissibleSequence(fam, entries), deg))
        rec(entries, deg)
    out.sort(key=_sort_key)
    return out


# ------------------------------------------------------------ the bijection


def word_to_sequence(w: Word, p: int) -> AdmissibleSequence:
    """Cartan's indices of a stable word.

    The letters of the expanded word other than sigma/rho^0/mu are read right
    to left; each gets ``a = (p-1)·(degree of everything to its right) + ε``
    with ε = 1 for phi^0 and 0 for gamma_p.  In the EM context a terminal
    phi^0 is read as a_0 = 1, and a terminal sigma as a_0 = 0.
    """
    check_prime(p)
    _require_admissible(w)
    if not is_stable(w):
        raise ValueError(f"word {w.render()!r} is not stable")
    ctx = context_of(w)
    letters = expand_word(w).letters
    entries: list[int] = []
    deg = 0
    for pos, x in enumerate(reversed(letters)):
        if x is ExpandedLetter.PHI0 or x is ExpandedLetter.GAMMA_P:
            eps = 1 if x is ExpandedLetter.PHI0 else 0
            entries.append(deg * (p - 1) + eps)
        deg = _expanded_degree(x, deg, p)
    n = len(w)
    if ctx is Context.THH:
        return AdmissibleSequence(thh_fp(n), tuple(entries))
    if letters[-1] is ExpandedLetter.PHI0:
        # entries[0] is the terminal phi^0, which reads as 0·(p-1) + 1
        return AdmissibleSequence(em_space(n), tuple(entries))
    return AdmissibleSequence(em_space(n), (0,) + tuple(entries))


def build_expanded(
    core: Sequence[ExpandedLetter],
    core_degree: int,
    core_is_divided: bool,
    entries: Sequence[int],
    p: int,
    length: int | None = None,
) -> tuple[list[ExpandedLetter], int, int]:
    """Place the letters for ``entries`` to the left of ``core``.

    Returns ``(letters, degree, compressed_length)``, the letters listed right
    to left.  Without ``length`` the shortest stable word is produced;
    otherwise sigma/rho^0 padding is added (or ``ValueError`` raised) to hit
    exactly ``length`` compressed letters.
    """
    letters = list(reversed(core))
    deg = core_degree
    size = sum(1 for x in core if x is not ExpandedLetter.GAMMA_P)
    m = p - 1

    def left_of(head: ExpandedLetter) -> ExpandedLetter:
        # the only σ/ρ⁰ letter allowed to the left of ``head``
        if head is ExpandedLetter.SIGMA:
            return ExpandedLetter.RHO0
        return ExpandedLetter.SIGMA

    def can_take_gamma_or_phi(head: ExpandedLetter) -> bool:
        if core_is_divided and len(letters) == len(core):
            return True
        return head in (ExpandedLetter.RHO0, ExpandedLetter.PHI0, ExpandedLetter.GAMMA_P)

    for a in entries:
        eps = a % (2 * m)
        if eps not in (0, 1):
            raise ValueError(f"entry {a} is not 0 or 1 mod {2 * m}")
        target = (a - eps) // m
        while deg < target or not can_take_gamma_or_phi(letters[-1]):
            x = left_of(letters[-1])
            letters.append(x)
            deg += 1
            size += 1
            if deg > target:
                raise ValueError(f"entry {a} is too small for the letters to its right")
        if deg != target:
            raise ValueError(f"entry {a} is too small for the letters to its right")
        x = ExpandedLetter.PHI0 if eps else ExpandedLetter.GAMMA_P
        letters.append(x)
        deg = _expanded_degree(x, deg, p)
        if x is ExpandedLetter.PHI0:
            size += 1

    if length is None:
        if letters[-1] is ExpandedLetter.GAMMA_P:
            letters.append(ExpandedLetter.SIGMA)
            deg += 1
            size += 1
        return letters, deg, size
    if size > length or (size == length and letters[-1] is ExpandedLetter.GAMMA_P):
        raise ValueError(f"no stable word of length {length} carries these indices")
    while size < length:
        x = left_of(letters[-1])
        letters.append(x)
        deg += 1
        size += 1
    return letters, deg, size


def sequence_to_word(s: AdmissibleSequence, p: int, n: int | None = None) -> Word:
    """The unique stable word of length ``n`` whose indices are ``s``."""
    check_prime(p)
    fam = s.family
    if fam.tag not in (FamilyTag.THH_FP, FamilyTag.TAQ_FP, FamilyTag.EM_SPACE, FamilyTag.DUAL_STEENROD):
        raise ValueError(f"no word calculus for family {fam.render()}")
    if n is None:
        n = fam.param
    if n is None:
        raise ValueError("a word length n is required")
    em = fam.tag in (FamilyTag.EM_SPACE, FamilyTag.DUAL_STEENROD)
    target = AdmissibleSequence(em_space(n) if em else thh_fp(n), s.entries)
    bad = target.violations(p)
    if bad:
        raise ValueError(f"no stable word of length {n} for {s.entries}: {'; '.join(bad)}")
    if em:
        if s.a0 == 1:
            core, cdeg, divided_core = [ExpandedLetter.PHI0], 2, True
        else:
            core, cdeg, divided_core = [ExpandedLetter.SIGMA], 1, False
    else:
        if n < 2:
            raise ValueError("THH words have length >= 2")
        core, cdeg, divided_core = [ExpandedLetter.SIGMA, ExpandedLetter.MU], 3, False
    letters, _, _ = build_expanded(core, cdeg, divided_core, s.tail, p, length=n)
    w = compress_word(ExpandedWord(tuple(reversed(letters))))
    if word_to_sequence(w, p).entries != target.entries:
        raise AssertionError(f"round trip failed for {s.entries} at n = {n}")
    return w


def minimal_length(s: AdmissibleSequence, p: int) -> int:
    """Smallest n at which ``s`` is realized by a stable word."""
    em = s.family.tag in (FamilyTag.EM_SPACE, FamilyTag.DUAL_STEENROD)
    n = 1 if em else 2
    while not AdmissibleSequence(em_space(n) if em else thh_fp(n), s.entries).excess_holds(p):
        n += 1
    return n
