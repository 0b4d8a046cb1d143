import pytest
from hypothesis import assume, given, strategies as st

from oracles import brute_lie, brute_sequences
from taqlab.core import GeneratorKind
from taqlab.words import (
    DUAL_STEENROD,
    MU,
    SIGMA,
    TAQ_FP,
    TAQ_Z,
    TAQ_ZPM_EXTRA,
    AdmissibleSequence,
    Letter,
    Word,
    admissibility_violations,
    compress_word,
    em_space,
    enumerate_sequences,
    enumerate_stable_words,
    expand_word,
    is_admissible,
    is_stable,
    lie,
    minimal_length,
    phi,
    rho,
    sequence_to_word,
    thh_fp,
    word_degree,
    word_to_sequence,
)

W = Word.parse


@pytest.mark.parametrize(
    "text,p,deg",
    [("sigma mu", 3, 3), ("rho^1 sigma mu", 3, 12), ("phi^0 rho^0 sigma mu", 3, 14), ("mu", 5, 2), ("phi^1", 3, 6), ("phi^0 rho^0 sigma", 3, 8)],
)
def test_word_degree(text, p, deg):
    assert word_degree(W(text), p) == deg


def test_render_parse_round_trip():
    w = Word((phi(0), rho(0), SIGMA, MU))
    assert w.render() == "phi^0 rho^0 sigma mu"
    assert W(w.render()) == w


@pytest.mark.parametrize(
    "text",
    ["rho^0 mu", "sigma sigma mu", "mu sigma mu", "phi^0 mu", "sigma phi^0 sigma mu", "rho^0 rho^0 sigma mu"],
)
def test_inadmissible_words(text):
    assert admissibility_violations(W(text))
    with pytest.raises(ValueError):
        word_degree(W(text), 3)


def test_stability():
    assert is_stable(W("sigma rho^1 sigma mu"))
    assert not is_stable(W("rho^1 sigma mu"))
    assert is_stable(W("phi^0 rho^0 sigma mu"))
    with pytest.raises(ValueError):
        word_to_sequence(W("rho^1 sigma mu"), 3)


def test_enumerated_stable_words():
    pick = lambda rows: [(w.render(), d) for w, d, _ in rows]
    assert pick(enumerate_stable_words(3, 3, 40)) == [("rho^0 sigma mu", 4)]
    assert pick(enumerate_stable_words(3, 2, 40)) == [("sigma mu", 3)]
    assert pick(enumerate_stable_words(3, 4, 14)) == [
        ("sigma rho^0 sigma mu", 5),
        ("sigma rho^1 sigma mu", 13),
        ("phi^0 rho^0 sigma mu", 14),
    ]
    kinds = {d: k for _, d, k in enumerate_stable_words(3, 4, 14)}
    assert kinds == {5: GeneratorKind.EXTERIOR, 13: GeneratorKind.EXTERIOR, 14: GeneratorKind.DIVIDED_POWER}


def test_cartan_indices_by_hand():
    s = word_to_sequence(W("phi^0 rho^0 sigma mu"), 3)
    assert s.entries == (9,) and s.degree(3) == 14 and s.excess_holds(3)
    s = word_to_sequence(W("sigma rho^1 sigma mu"), 3)
    assert s.entries == (8,) and s.degree(3) == 13
    s = word_to_sequence(W("rho^0 sigma mu"), 3)
    assert s.entries == () and s.degree(3) == 4


def test_sequence_to_word_by_hand():
    assert sequence_to_word(AdmissibleSequence(thh_fp(4), (8,)), 3).render() == "sigma rho^1 sigma mu"
    assert sequence_to_word(AdmissibleSequence(thh_fp(3), ()), 3).render() == "rho^0 sigma mu"
    with pytest.raises(ValueError, match="excess"):
        sequence_to_word(AdmissibleSequence(thh_fp(5), (12,)), 3)


def _all_stable(p, max_degree, context):
    out = []
    n = 1 if context == "em" else 2
    while True:
        rows = enumerate_stable_words(p, n, max_degree, context)
        if not rows:
            break
        out.extend((w, n) for w, _, _ in rows)
        n += 1
    return out


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("context", ["thh", "em"])
def test_word_round_trip_exhaustive(p, context):
    words = _all_stable(p, 40, context)
    assert words
    for w, n in words:
        s = word_to_sequence(w, p)
        assert s.is_admissible(p), (w.render(), s.violations(p))
        assert sequence_to_word(s, p, n) == w


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("context", ["thh", "em"])
def test_counting_equivalence(p, context):
    for n in range(1 if context == "em" else 2, 9):
        fam = em_space(n) if context == "em" else thh_fp(n)
        words = enumerate_stable_words(p, n, 40, context)
        seqs = enumerate_sequences(fam, p, 40)
        assert sorted(d for _, d, _ in words) == sorted(d for _, d in seqs)
        for s, d in seqs:
            assert word_degree(sequence_to_word(s, p, n), p) == d


@pytest.mark.parametrize(
    "family,name,n",
    [(TAQ_FP, "taq_fp", None), (TAQ_Z, "taq_z", None), (TAQ_ZPM_EXTRA, "extra", None), (DUAL_STEENROD, "steenrod", None), (em_space(3), "em", 3), (thh_fp(5), "thh", 5)],
)
@pytest.mark.parametrize("p", [3, 5])
def test_enumeration_matches_brute_force(family, name, n, p):
    got = [(s.entries, d) for s, d in enumerate_sequences(family, p, 40)]
    assert got == brute_sequences(name, p, 40, n)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_lie_enumeration_matches_brute_force(p):
    got = sorted((s.entries, d) for s, d in enumerate_sequences(lie(-3), p, 40))
    assert got == sorted(brute_lie(p, -3, 40))


def test_lie_family_limits():
    with pytest.raises(ValueError):
        enumerate_sequences(lie(-2), 3, 10)
    with pytest.raises(ValueError):
        enumerate_sequences(lie(3), 3, 10)


def test_empty_sequence_is_admissible_everywhere():
    for fam in (TAQ_FP, TAQ_Z, TAQ_ZPM_EXTRA, DUAL_STEENROD, em_space(2), thh_fp(3), lie(-3)):
        assert AdmissibleSequence(fam, ()).is_admissible(3)
    assert AdmissibleSequence(TAQ_Z, ()).entries == (0,)


def test_rejects_p_two():
    with pytest.raises(ValueError, match="odd"):
        enumerate_sequences(TAQ_FP, 2, 10)


@given(st.sampled_from([3, 5]), st.integers(0, 60))
def test_excess_is_monotone_in_n(p, idx):
    seqs = [s for s, _ in enumerate_sequences(TAQ_FP, p, 80)]
    s = seqs[idx % len(seqs)]
    flags = [AdmissibleSequence(thh_fp(n), s.entries).excess_holds(p) for n in range(2, 60)]
    first = flags.index(True)
    assert all(flags[first:]) and not any(flags[:first])
    assert minimal_length(s, p) == first + 2


@st.composite
def stable_words(draw):
    """Random admissible stable words grown letter by letter from the right."""
    p = draw(st.sampled_from([3, 5]))
    em = draw(st.booleans())
    letters = [draw(st.sampled_from([SIGMA, phi(0), phi(1)]))] if em else [MU]
    for _ in range(draw(st.integers(0 if em else 1, 6))):
        head = letters[0]
        if head == MU:
            options = [SIGMA]
        elif head == SIGMA:
            options = [rho(0), rho(1), rho(2)]
        else:
            options = [SIGMA, phi(0), phi(1)]
        letters.insert(0, draw(st.sampled_from(options)))
    w = Word(tuple(letters))
    assume(is_stable(w))
    return p, w


@given(stable_words())
def test_expand_compress_and_bijection_round_trip(data):
    p, w = data
    assert is_admissible(w)
    assert compress_word(expand_word(w)) == w
    s = word_to_sequence(w, p)
    assert sequence_to_word(s, p, len(w)) == w
    assert word_degree(w, p) == s.degree(p)


def test_letter_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Letter.parse("rho^-1")
    with pytest.raises(ValueError):
        Letter.parse("phi")
    with pytest.raises(ValueError):
        Letter.parse("sigma^2")
    # free names are kept as chain labels
    assert Letter.parse("x").render() == "x"
