"""Dimension tables for the dual Steenrod algebra and its HZ-based relatives.

``A_p`` is counted through Cartan's admissible sequences with the excess
dropped (the stable range of H_*K(Z/p, n)).  ``A_p/β`` follows from the exact
β-resolution, i.e. ``(1 + t)·f_{A/β}(t) = f_A(t)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import DimTable, InvariantError, check_prime
from .words import DUAL_STEENROD, em_space, enumerate_sequences


class SteenrodVariant(enum.Enum):
    DUAL = "dual"
    MOD_BETA = "mod_beta"
    HZ_HOMOLOGY = "hz_homology"
    TAQ_ZPN_OVER_Z = "taq_zpn_over_z"
    AQ_ZPN_OVER_Z = "aq_zpn_over_z"


def dual_steenrod_dims(p: int, cutoff: int) -> DimTable:
    check_prime(p)
    dims: dict[int, int] = {}
    for _, deg in enumerate_sequences(DUAL_STEENROD, p, cutoff):
        dims[deg] = dims.get(deg, 0) + 1
    return DimTable(cutoff, dims)


def stable_em_count(p: int, degree: int, n: int) -> int:
    """Number of generators of H_*K(Z/p, n) in degree ``degree + n``."""
    return sum(1 for _, d in enumerate_sequences(em_space(n), p, degree + n) if d == degree + n)


def a_mod_beta_dims(p: int, cutoff: int) -> DimTable:
    a = dual_steenrod_dims(p, cutoff)
    c: dict[int, int] = {}
    prev = 0
    for d in range(cutoff + 1):
        x = a[d] - prev
        if x < 0:
            raise InvariantError(f"negative coefficient {x} of A_p/β in degree {d}")
        c[d] = x
        prev = x
    return DimTable(cutoff, c)


@dataclass(frozen=True)
class HZHomologyTable:
    """Free and p-torsion ranks of HZ_*HZ at one prime, kept apart."""

    cutoff: int
    free: DimTable
    torsion: DimTable

    def rows(self) -> list[dict]:
        return [
            {"degree": d, "free_rank": self.free[d], "torsion_rank": self.torsion[d]}
            for d in range(self.cutoff + 1)
        ]


def hz_base_table(variant: SteenrodVariant | str, p: int, cutoff: int, n: int = 1) -> DimTable | HZHomologyTable:
    """Tables over the HZ base.

    * ``HZ_HOMOLOGY``: the unit is a free Z in degree 0; every other class of
      A_p/β is torsion, shifted up by one.
    * ``TAQ_ZPN_OVER_Z``: Σ²A_p/β, except the class coming from the unit sits
      in degree 1 rather than 2.  Independent of n.
    * ``AQ_ZPN_OVER_Z``: the cyclic module Z/p^n in degree 1.
    """
    check_prime(p)
    variant = SteenrodVariant(variant)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if variant is SteenrodVariant.DUAL:
        return dual_steenrod_dims(p, cutoff)
    if variant is SteenrodVariant.MOD_BETA:
        return a_mod_beta_dims(p, cutoff)
    if variant is SteenrodVariant.AQ_ZPN_OVER_Z:
        return DimTable(cutoff, {1: 1} if cutoff >= 1 else {})
    c = a_mod_beta_dims(p, cutoff)
    if variant is SteenrodVariant.HZ_HOMOLOGY:
        torsion = {d: c[d - 1] for d in range(2, cutoff + 1)}
        return HZHomologyTable(cutoff, DimTable(cutoff, {0: 1}), DimTable(cutoff, torsion))
    dims = {d: c[d - 2] for d in range(3, cutoff + 1)}
    if cutoff >= 1:
        dims[1] = c[0]
    return DimTable(cutoff, dims)
