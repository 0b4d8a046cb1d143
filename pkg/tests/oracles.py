"""Brute-force reference computations used by the tests.

Nothing here imports taqlab: each oracle re-derives its answer from the
definitions by exhaustive enumeration, so agreement is a real cross-check.
"""

from __future__ import annotations

import itertools


def monomial_count(gens, p, cutoff):
    """Hilbert series of a free graded-commutative algebra by listing monomials.

    ``gens`` is a list of ``(degree, kind)`` with kind in
    {"polynomial", "exterior", "truncated", "divided_power"}.  A divided power
    algebra has one basis element in each multiple of its degree, which is how
    it is counted here (no splitting into truncated pieces).
    """
    caps = {"polynomial": None, "exterior": 1, "truncated": p - 1, "divided_power": None}
    counts = [0] * (cutoff + 1)

    def rec(i, deg):
        if i == len(gens):
            counts[deg] += 1
            return
        d, kind = gens[i]
        e = 0
        while deg + e * d <= cutoff and (caps[kind] is None or e <= caps[kind]):
            rec(i + 1, deg + e * d)
            e += 1

    rec(0, 0)
    return {d: c for d, c in enumerate(counts) if c}


def milnor_dual_steenrod(p, cutoff):
    """E(τ_0, τ_1, ...) ⊗ P(ξ_1, ξ_2, ...) with |τ_i| = 2p^i - 1, |ξ_i| = 2p^i - 2."""
    gens = []
    i = 0
    while 2 * p**i - 1 <= cutoff:
        gens.append((2 * p**i - 1, "exterior"))
        if i >= 1:
            gens.append((2 * p**i - 2, "polynomial"))
        i += 1
    return monomial_count(gens, p, cutoff)


def truncated_tor(h, x_deg, cutoff):
    """Tor over k[x]/x^h (h >= 2, |x| even) in total degree: classes at j·h|x| + 2j and
    j·h|x| + |x| + 2j + 1 for j >= 0."""
    out = {}
    j = 0
    while j * h * x_deg + 2 * j <= cutoff:
        for d in (j * h * x_deg + 2 * j, j * h * x_deg + x_deg + 2 * j + 1):
            if d <= cutoff:
                out[d] = out.get(d, 0) + 1
        j += 1
    return out


def span_size(rows, p):
    """|row space| by summing every F_p-combination of the rows."""
    if not rows:
        return 1
    n = len(rows[0])
    seen = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        seen.add(tuple(sum(c * r[k] for c, r in zip(coeffs, rows)) % p for k in range(n)))
    return len(seen)


def _congruent(a, p):
    return a % (2 * p - 2) in (0, 1)


def _tuples(lo, hi, max_len):
    for k in range(max_len + 1):
        yield from itertools.product(range(lo, hi + 1), repeat=k)


def brute_sequences(family, p, max_degree, n=None):
    """All sequences of a family with degree <= max_degree, filtered from every tuple.

    family: "em", "steenrod", "thh", "taq_fp", "taq_z", "extra".  Returns a
    sorted list of (entries, degree); families with a_0 list it first.
    """
    out = []
    max_len = 1
    while sum(2 * (p - 1) * p**i for i in range(max_len + 1)) <= max_degree:
        max_len += 1
    for tail in _tuples(1, max_degree, max_len):
        if not all(_congruent(a, p) for a in tail):
            continue
        if any(tail[i + 1] < p * tail[i] for i in range(len(tail) - 1)):
            continue
        for a0 in ((0, 1) if family in ("em", "steenrod", "taq_z") else (None,)):
            if family in ("em", "steenrod"):
                if tail and tail[0] < 2 * p - 2:
                    continue
                size = a0 + sum(tail)
                deg = size + (n if family == "em" else 0)
                entries = (a0,) + tail
                # a_k is the last entry, a_0 itself when there is no tail
                if family == "em" and not p * entries[-1] < (p - 1) * (n + size):
                    continue
            elif family in ("thh", "taq_fp"):
                if tail and tail[0] < 4 * (p - 1):
                    continue
                size = 1 + sum(tail)
                deg = size + (n if family == "thh" else 0)
                if family == "thh" and tail and not p * tail[-1] < (p - 1) * (n + size):
                    continue
                entries = tail
            elif family == "taq_z":
                if tail and tail[0] < 2 * (p + a0) * (p - 1):
                    continue
                deg = 2 * p + a0 + sum(tail)
                entries = (a0,) + tail
            elif family == "extra":
                if tail and tail[0] < 2 * (p - 1):
                    continue
                deg = 1 + sum(tail)
                entries = tail
            else:
                raise ValueError(family)
            if deg <= max_degree:
                out.append((entries, deg))
    return sorted(set(out), key=lambda r: (r[1], len(r[0]), r[0]))


def brute_lie(p, ell, max_abs):
    """Lie(ℓ) index sequences for ℓ < 0 with |degree| <= max_abs.

    i_k <= (p-1)ℓ < 0 and i_j < p·i_{j+1} force every entry negative, so each
    entry lowers the degree and lengths are bounded.  Tuples are grown from
    the right; the per-entry congruence and the growth condition against the
    neighbour are checked as each entry is added.
    """
    values = [v for v in range(-2 * max_abs - 2, 0) if v % (2 * (p - 1)) in (0, 1)]
    found = []

    def grow(seq):
        deg = ell + sum(seq) - len(seq)
        if abs(deg) > max_abs:
            return
        found.append((seq, deg))
        for v in values:
            if not seq and v > (p - 1) * ell:
                continue
            if seq and not v < p * seq[0]:
                continue
            grow((v,) + seq)

    grow(())
    return found
