"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import json
import os
import subprocess
import sys
import time

import pytest

from oracles import brute_sequences
from taqlab.bar import tor_dims, verify_rule
from taqlab.core import exterior, hilbert_series, polynomial, presentation_from_free, truncated
from taqlab.steenrod import a_mod_beta_dims, dual_steenrod_dims, hz_base_table, stable_em_count
from taqlab.taq import crosscheck_lie, extra_dims, lie_dims, stable_counts, taq_dims, torsion_ranks
from taqlab.tor import TowerSpec, build_tower
from taqlab.words import enumerate_sequences, enumerate_stable_words, sequence_to_word, thh_fp, em_space, word_to_sequence


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def test_criterion_01_single_rule_oracle_equivalence(report):
    start = time.perf_counter()
    bad = []
    for p in (3, 5):
        algebras = [polynomial(p, 2), polynomial(p, 4), exterior(p, 3), exterior(p, 5), truncated(p, 2), truncated(p, 4)]
        for alg in algebras:
            rep = verify_rule(alg, 20)
            if not rep.ok:
                bad.append((p, rep.name, rep.mismatches))
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 10, f"12 single-generator algebras through degree 20, {len(bad)} mismatching, {elapsed:.1f}s")


def test_criterion_02_tower_oracle_equivalence(report):
    start = time.perf_counter()
    bad = []
    for n in (1, 2, 3):
        stage = build_tower(TowerSpec("thh_fp", 3, n), 24)
        nxt = hilbert_series(build_tower(TowerSpec("thh_fp", 3, n + 1), 24), 24)
        # tor_dims raises InvariantError if d∘d ≠ 0 in any computed bidegree
        oracle = tor_dims(presentation_from_free(stage, 24), 24).total
        if oracle.dims != nxt.dims:
            bad.append(n)
    elapsed = time.perf_counter() - start
    report(2, not bad and elapsed < 120, f"Tor(B^n) = B^(n+1) for n = 1, 2, 3 at p = 3 through 24, d∘d = 0 checked, {elapsed:.1f}s")


def test_criterion_03_calibration(report):
    res = tor_dims(presentation_from_free(polynomial(3, 2, "mu"), 10))
    total3 = res.total[3]
    ok = total3 == 1 and res.bidegrees[(1, 2)] == 1 and sum(r for (s, t), r in res.bidegrees.dims.items() if s + t == 3) == 1
    report(3, ok, f"Tor over P(mu) has {total3} class in total degree 3, at bidegree (1,2)")


def _stable_words(p, context, max_degree):
    n = 1 if context == "em" else 2
    while rows := enumerate_stable_words(p, n, max_degree, context):
        yield n, rows
        n += 1


def test_criterion_04_cartan_bijection(report):
    checked, bad = 0, []
    for p in (3, 5):
        for context in ("thh", "em"):
            for n, rows in _stable_words(p, context, 40):
                for w, d, _ in rows:
                    checked += 1
                    if sequence_to_word(word_to_sequence(w, p), p, n) != w:
                        bad.append((p, w.render()))
                fam = thh_fp(n) if context == "thh" else em_space(n)
                seqs = enumerate_sequences(fam, p, 40)
                if sorted(d for _, d, _ in rows) != sorted(d for _, d in seqs):
                    bad.append((p, context, n, "count"))
                for s, _ in seqs:
                    if word_to_sequence(sequence_to_word(s, p, n), p).entries != s.entries:
                        bad.append((p, s.entries))
    report(4, not bad and checked > 0, f"{checked} stable words round-tripped, counts equal, {len(bad)} failures")


def test_criterion_05_stabilization(report):
    p, top = 3, 20
    n_max = top * p + 5
    words, _ = stable_counts(p, top, n_max)
    taq = taq_dims("fp", p, top)
    bad = [d for d in range(1, top + 1) if any(words[d][n] != taq[d] for n in range(d * p, n_max + 1))]
    support_ok = taq.table.dims == {d: 1 for d in (1, 9, 10, 13, 14, 17, 18)}
    report(5, not bad and support_ok, f"counts constant for d·p <= n <= {n_max}, support {taq.table.support()}")


def test_criterion_06_lie_crosscheck(report):
    reps = {p: crosscheck_lie(p, 40) for p in (3, 5)}
    ok = all(r.ok for r in reps.values())
    direct = all(taq_dims("fp", p, 40)[d] == lie_dims(p, -3, 42)[-2 - d] for p in (3, 5) for d in range(41))
    report(6, ok and direct, f"TAQ_d(HF_p) = Lie_(-2-d) for d <= 40, p = 3, 5: mismatches {[list(r.mismatches) for r in reps.values()]}")


def test_criterion_07_taq_over_z(report):
    bad = []
    for p in (3, 5):
        z = taq_dims("z", p, 60)
        if any(z[d] for d in range(1, 2 * p)) or z[2 * p] != 1 or z[2 * p + 1] != 1:
            bad.append((p, "ranks"))
        t = torsion_ranks(p, 60)  # raises on a negative rank
        if any(t[n] < 0 for n in range(61)) or t[2 * p] != 1 or t[2 * p + 1] != 0:
            bad.append((p, "torsion"))
    report(7, not bad, f"TAQ(HZ) vanishes below 2p, rank 1 at 2p, 2p+1; torsion ranks nonnegative through 60; failures {bad}")


def test_criterion_08_zpm_split(report):
    bad = []
    for p in (3, 5):
        zpm, z, extra = taq_dims("zpm", p, 40), taq_dims("z", p, 40), extra_dims(p, 40)
        bad += [(p, d) for d in range(41) if zpm[d] - z[d] != extra[d]]
    brute = {}
    for _, d in brute_sequences("extra", 3, 8):
        brute[d] = brute.get(d, 0) + 1
    got = extra_dims(3, 8).dims
    ok = not bad and got == brute == {1: 1, 5: 1, 6: 1}
    report(8, ok, f"ZpM - Z = extra through 40; extra support through 8 at p = 3 is {got} (brute force {brute})")


def test_criterion_09_steenrod_identities(report):
    bad = []
    for p in (3, 5):
        a, c = dual_steenrod_dims(p, 60), a_mod_beta_dims(p, 60)
        if c[0] != 1 or any(c[d] + c[d - 1] != a[d] for d in range(1, 61)):
            bad.append((p, "beta"))
    low = dual_steenrod_dims(3, 5).as_list(0, 5)
    em = [stable_em_count(3, d, d + 4) for d in range(6)]
    tables = [hz_base_table("taq_zpn_over_z", 3, 40, n).dims for n in (1, 2, 3)]
    zpn = hz_base_table("taq_zpn_over_z", 3, 40, 1)
    ok = not bad and low == em == [1, 1, 0, 0, 1, 2] and tables[0] == tables[1] == tables[2] and zpn[1] == 1 and zpn[2] == 0
    report(9, ok, f"(1+t)f_A/β = f_A through 60; A_3 degrees 0..5 = {low} (EM stable {em}); TAQ(Z/p^n|Z) n-independent, ranks deg1 {zpn[1]}, deg2 {zpn[2]}")


CLI_RUNS = [
    ["taq", "--target", "fp", "--p", "3", "--max-degree", "20", "--format", "json"],
    ["taq", "--target", "zpm", "--p", "5", "--format", "csv"],
    ["verify", "--p", "3", "--stages", "4", "--max-degree", "24"],
    ["steenrod", "--variant", "hz_homology", "--p", "3", "--format", "table"],
    ["lie", "--p", "3", "--ell", "-3"],
]


def test_criterion_10_determinism_and_cache_transparency(report, tmp_path):
    env = dict(os.environ, TAQLAB_CACHE_DIR=str(tmp_path))
    bad = []
    for argv in CLI_RUNS:
        cmd = [sys.executable, "-m", "taqlab", *argv]
        outs = [
            subprocess.run(cmd + ["--no-cache"], capture_output=True, env=env),
            subprocess.run(cmd + ["--no-cache"], capture_output=True, env=env),
            subprocess.run(cmd, capture_output=True, env=env),  # writes the cache
            subprocess.run(cmd, capture_output=True, env=env),  # served from cache
        ]
        if any(o.returncode != 0 for o in outs) or len({o.stdout for o in outs}) != 1:
            bad.append(argv[0])
    entries = len(list(tmp_path.glob("*.json")))
    if json.loads(subprocess.run([sys.executable, "-m", "taqlab", *CLI_RUNS[0]], capture_output=True, env=env).stdout)["schema"] != "taqlab/1":
        bad.append("schema")
    report(10, not bad and entries == len(CLI_RUNS), f"{len(CLI_RUNS)} commands x 4 runs byte-identical with and without cache; {entries} cache entries")
