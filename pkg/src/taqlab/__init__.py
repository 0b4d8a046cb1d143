"""Iterated Tor towers, admissible words, TAQ bases and Steenrod tables over F_p."""

__version__ = "0.1.0"

from .bar import BarComplex, VerifyReport, bar_differential, tor_dims, verify_rule
from .core import (
    DimTable,
    FreeGCAlgebra,
    Generator,
    GeneratorKind,
    GradedAlgebraPresentation,
    InvariantError,
    divided,
    exterior,
    hilbert_series,
    polynomial,
    presentation_from_free,
    truncated,
)
from .steenrod import HZHomologyTable, SteenrodVariant, a_mod_beta_dims, dual_steenrod_dims, hz_base_table
from .taq import Target, crosscheck_lie, lie_dims, stabilization_check, taq_dims, torsion_ranks
from .tor import TowerFamily, TowerSpec, build_tower, tor_of_free
from .words import (
    AdmissibleSequence,
    SequenceFamily,
    Word,
    enumerate_sequences,
    enumerate_stable_words,
    expand_word,
    compress_word,
    sequence_to_word,
    word_degree,
    word_to_sequence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
