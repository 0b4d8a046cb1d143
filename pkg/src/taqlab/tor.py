"""Closed-form Tor rules over F_p and the towers they generate.

One Tor step acts generator by generator (Künneth over a field):

* P(x), |x| even     ->  E(σx),            |σx| = |x| + 1
* E(x), |x| odd      ->  Γ(ρ^0 x),         |ρ^0 x| = |x| + 1
* P_p(x), |x| even   ->  E(σx) ⊗ Γ(φ^0 x), |φ^0 x| = 2 + p|x|

Divided powers are first split into their truncated pieces.  Every rule is
degree-nondecreasing, so a tower truncated at a cutoff can be iterated at the
same cutoff without losing anything below it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .core import FreeGCAlgebra, Generator, GeneratorKind, check_prime, expand_divided
from .words import MU, SIGMA, Letter, Word, phi, rho


class TowerFamily(enum.Enum):
    THH_FP = "thh_fp"
    EM_SPACE = "em_space"
    THH_HZ = "thh_hz"
    HH_ZPM = "hh_zpm"
    THH_ZPM = "thh_zpm"


@dataclass(frozen=True)
class TowerSpec:
    family: TowerFamily
    p: int
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", TowerFamily(self.family))
        check_prime(self.p)
        if self.order < 1:
            raise ValueError(f"tower order must be >= 1, got {self.order}")


def _prefix(label, letter: Letter):
    if isinstance(label, Word):
        return label.prefixed(letter)
    return Word((letter, Letter(str(label))))


def tor_of_free(alg: FreeGCAlgebra, cutoff: int) -> FreeGCAlgebra:
    """Tor^A(F_p, F_p) of a free graded-commutative algebra, through ``cutoff``."""
    p = alg.p
    out: list[Generator] = []
    for g in expand_divided(alg, cutoff).generators:
        if g.degree > cutoff:
            continue
        if g.kind is GeneratorKind.POLYNOMIAL:
            out.append(Generator(g.degree + 1, GeneratorKind.EXTERIOR, _prefix(g.label, SIGMA)))
        elif g.kind is GeneratorKind.EXTERIOR:
            out.append(Generator(g.degree + 1, GeneratorKind.DIVIDED_POWER, _prefix(g.label, rho(0))))
        elif g.kind is GeneratorKind.TRUNCATED:
            out.append(Generator(g.degree + 1, GeneratorKind.EXTERIOR, _prefix(g.label, SIGMA)))
            out.append(
                Generator(2 + p * g.degree, GeneratorKind.DIVIDED_POWER, _prefix(g.label, phi(0)))
            )
        else:  # pragma: no cover - expand_divided removed these
            raise AssertionError(g)
    return FreeGCAlgebra(p, tuple(x for x in out if x.degree <= cutoff))


def base_algebra(family: TowerFamily, p: int) -> FreeGCAlgebra:
    """The order-1 algebra of a single-chain tower."""
    POLY, EXT, DIV = GeneratorKind.POLYNOMIAL, GeneratorKind.EXTERIOR, GeneratorKind.DIVIDED_POWER
    if family is TowerFamily.THH_FP:
        return FreeGCAlgebra(p, (Generator(2, POLY, Word((MU,))),))
    if family is TowerFamily.EM_SPACE:
        return FreeGCAlgebra(
            p, (Generator(2, DIV, Word((phi(0),))), Generator(1, EXT, Word((SIGMA,))))
        )
    if family is TowerFamily.HH_ZPM:
        return FreeGCAlgebra(p, (Generator(2, DIV, Word((MU,))),))
    raise ValueError(f"{family.value} is a product of towers, not a single chain")


def iterate_tor(alg: FreeGCAlgebra, steps: int, cutoff: int) -> FreeGCAlgebra:
    alg = alg.truncated(cutoff)
    for _ in range(steps):
        alg = tor_of_free(alg, cutoff)
    return alg


def _hz_chains(p: int) -> tuple[FreeGCAlgebra, FreeGCAlgebra]:
    x = FreeGCAlgebra(p, (Generator(2 * p, GeneratorKind.POLYNOMIAL, Word((Letter("x"),))),))
    y = FreeGCAlgebra(p, (Generator(2 * p - 2, GeneratorKind.POLYNOMIAL, Word((Letter("y"),))),))
    return x, y


def build_tower(spec: TowerSpec, cutoff: int) -> FreeGCAlgebra:
    """The order-n algebra of ``spec.family`` through ``cutoff``.

    THH_HZ(n) is B^n(x_{2p}) ⊗ B^{n+1}(y_{2p-2}) with both chains starting
    from polynomial algebras; THH_ZPM(n) is THH_HZ(n) ⊗ HH_ZPM(n).
    """
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    fam, p, n = spec.family, spec.p, spec.order
    if fam in (TowerFamily.THH_FP, TowerFamily.EM_SPACE, TowerFamily.HH_ZPM):
        return iterate_tor(base_algebra(fam, p), n - 1, cutoff)
    if fam is TowerFamily.THH_HZ:
        x, y = _hz_chains(p)
        return iterate_tor(x, n - 1, cutoff).tensor(iterate_tor(y, n, cutoff))
    hz = build_tower(TowerSpec(TowerFamily.THH_HZ, p, n), cutoff)
    return hz.tensor(build_tower(TowerSpec(TowerFamily.HH_ZPM, p, n), cutoff))


def tower_stages(spec_family: TowerFamily, p: int, last: int, cutoff: int) -> Iterator[tuple[int, FreeGCAlgebra]]:
    """Yield ``(n, stage_n)`` for n = 1..last, reusing each previous stage."""
    fam = TowerFamily(spec_family)
    if fam in (TowerFamily.THH_FP, TowerFamily.EM_SPACE, TowerFamily.HH_ZPM):
        alg = base_algebra(fam, p).truncated(cutoff)
        for n in range(1, last + 1):
            if n > 1:
                alg = tor_of_free(alg, cutoff)
            yield n, alg
        return
    for n in range(1, last + 1):
        yield n, build_tower(TowerSpec(fam, p, n), cutoff)


def generators_in_degree(alg: FreeGCAlgebra, degree: int, expanded: bool = False) -> list[Generator]:
    """Generators sitting exactly in ``degree``.

    With ``expanded`` the divided powers are split first, so e.g. ρ^1σμ shows
    up as a generator of its own; otherwise only the word-level generators
    are listed.
    """
    if degree < 1:
        return []
    src = expand_divided(alg, degree) if expanded else alg
    return [g for g in src.generators if g.degree == degree]
