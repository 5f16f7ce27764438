"""Exit criteria. One test per criterion; the terminal summary prints a
PASS/FAIL line for each (see conftest.py)."""

import itertools
import random
import time

import numpy as np
import pytest

from oracles import definition_tables, rotations
from periodrec import _kernels
from periodrec.bench import corpus, time_engine
from periodrec.corpus import GenSpec, generate
from periodrec.kangaroo import last_row_thresholded, rotation_distances
from periodrec.oracle import brute_apr, ed_to_prefix
from periodrec.recovery import (
    RecoveryParams,
    canonical_rotation,
    candidate_rotation_classes,
    primitive,
    recover,
    tau,
)
from periodrec.wraparound import full_table

EPS = RecoveryParams(1, 20)


def apm_instances(count=1200, seed=2024):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, 40)
        p = rng.randint(1, 8)
        alphabet = b"ABCD"[: rng.choice((2, 3, 4))]
        k = rng.randint(0, 6)
        p_word = bytes(rng.choice(alphabet) for _ in range(p))
        if rng.random() < 0.5:
            s = bytes(rng.choice(alphabet) for _ in range(n))
        else:
            # near-periodic text so that many values fall at or below k
            base = (p_word * (n // p + 2))[rng.randrange(p):][:n]
            s = bytearray(base)
            for _ in range(rng.randint(0, 4)):
                op, pos = rng.randrange(3), rng.randint(0, len(s))
                if op == 0:
                    s.insert(pos, rng.choice(alphabet))
                elif pos < len(s):
                    if op == 1:
                        del s[pos]
                    else:
                        s[pos] = rng.choice(alphabet)
            s = bytes(s[:40])
        yield s, p_word, k


def apr_instances(count=220, seed=77):
    rng = random.Random(seed)
    out = []
    for t in range(count):
        n = rng.randint(1, 30)
        if t % 2 == 0:
            s = bytes(rng.choice(b"AB") for _ in range(n))
        else:
            p = rng.randint(1, min(7, n))
            spec = GenSpec(p=p, n=max(n, p), edits=rng.randint(0, 3), alphabet_size=2, seed=rng.getrandbits(64))
            s = generate(spec)[:30] or b"A"
        out.append(s)
    return out


def test_ac1_paper_golden_values():
    start = time.perf_counter()
    table = full_table("CBAACAABCA", "ABCA")
    assert table[3, 1] == 1
    dists = rotation_distances("CBAACAABCA", "ABCA", 3)
    assert rotations(b"ABCA")[2] == b"CAAB"
    assert dists[2] == 2
    assert time.perf_counter() - start < 1.0


def test_ac2_apm_oracle_equivalence():
    start = time.perf_counter()
    count = 0
    for s, p_word, k in apm_instances():
        row = full_table(s, p_word)[-1]
        out = last_row_thresholded(s, p_word, k)
        assert out.per_column == tuple(int(v) if v <= k else None for v in row), (s, p_word, k)
        got = rotation_distances(s, p_word, k)
        for j, u in enumerate(rotations(p_word)):
            want = ed_to_prefix(s, u)
            assert got[j] == (want if want <= k else None), (s, p_word, k, j)
        count += 1
    elapsed = time.perf_counter() - start
    print(f"AC2: {count} instances, 0 mismatches, {elapsed:.1f}s")
    assert count >= 1000
    assert elapsed < 30


def test_ac3_definition_equivalence_exhaustive():
    start = time.perf_counter()
    # definition values for a row i depend only on S[:i]; evaluate them once
    # for every binary text of length 10 and read shorter texts off prefixes
    n_max = 10
    longest = np.array(list(itertools.product(b"AB", repeat=n_max)), dtype=np.uint8)
    checked = 0
    for p in range(1, 5):
        for p_word in itertools.product(b"AB", repeat=p):
            p_word = bytes(p_word)
            brute = definition_tables(longest, p_word)
            for n in range(0, n_max + 1):
                # texts of length n are the distinct prefixes; take one extension each
                stride = 2 ** (n_max - n)
                for row in range(0, len(longest), stride):
                    s = longest[row, :n].tobytes()
                    table = full_table(s, p_word)
                    assert (table == brute[row, : n + 1]).all(), (s, p_word)
                    checked += 1
    elapsed = time.perf_counter() - start
    print(f"AC3: {checked} (text, period) pairs, {elapsed:.1f}s")
    assert checked == (2 ** (n_max + 1) - 1) * 30
    assert elapsed < 60


@pytest.fixture(scope="module")
def apr_cases():
    return [(s, brute_apr(s, EPS)) for s in apr_instances()]


def test_ac4_apr_oracle_equivalence(apr_cases):
    start = time.perf_counter()
    nonempty = 0
    for s, expected in apr_cases:
        got = {(r.word, r.distance) for r in recover(s, EPS)}
        assert got == expected, s
        nonempty += bool(expected)
    elapsed = time.perf_counter() - start
    print(f"AC4: {len(apr_cases)} strings ({nonempty} with periods), 0 mismatches")
    assert len(apr_cases) >= 200
    assert elapsed < 120


def test_ac5_candidate_completeness(apr_cases):
    for s, expected in apr_cases:
        for word, _ in expected:
            classes = {c.canonical for c in candidate_rotation_classes(s, len(word), EPS)}
            canon = word[canonical_rotation(word):] + word[: canonical_rotation(word)]
            assert canon in classes, (s, word)


def test_ac6a_lcp_query_count():
    runs = 0
    for s, p_word, k in apm_instances(300, seed=5):
        assert last_row_thresholded(s, p_word, k).lcp_queries == (k + 1) * len(p_word)
        runs += 1
    text, word = corpus(1 << 14, 64, seed=3)
    assert last_row_thresholded(text, word, 8).lcp_queries == 9 * 64
    assert runs == 300


def _require_compiled():
    if _kernels.BACKEND != "compiled":
        pytest.fail("timing criteria need the compiled backend; build the extension (pip install -e .)")


def test_ac6b_near_linear_growth():
    _require_compiled()
    sizes = [1 << e for e in range(16, 21)]
    medians = []
    for n in sizes:
        text, word = corpus(n, 64, edits=8, seed=1)
        medians.append(time_engine("kangaroo", text, word, 8, runs=5))
    ratios = [b / a for a, b in zip(medians, medians[1:])]
    print("AC6b: median ns", medians, "ratios", [round(r, 2) for r in ratios])
    assert all(1.5 <= r <= 3.0 for r in ratios), ratios


def test_ac6c_kangaroo_beats_full_table():
    _require_compiled()
    text, word = corpus(1 << 18, 256, edits=8, seed=1)
    kang = time_engine("kangaroo", text, word, 8, runs=5)
    full = time_engine("full", text, word, 8, runs=3)
    print(f"AC6c: kangaroo {kang} ns, full {full} ns, speedup {full / kang:.1f}x")
    assert full >= 10 * kang


def test_ac7_invariant_suites():
    rng = random.Random(31)
    for _ in range(200):
        n, p = rng.randint(0, 25), rng.randint(1, 6)
        s = bytes(rng.choice(b"ABC") for _ in range(n))
        p_word = bytes(rng.choice(b"ABC") for _ in range(p))
        t = full_table(s, p_word).astype(np.int64)
        nxt = np.roll(t, -1, axis=1)
        assert (nxt[1:] >= t[:-1]).all()
        assert (nxt <= t + 1).all() and (t[1:] <= t[:-1] + 1).all() and (nxt[1:] <= t[:-1] + 1).all()
        out = last_row_thresholded(s, p_word, rng.randint(0, 6))
        assert (np.diff(out.frontier, axis=0) >= 0).all()
    assert tau(100, 4, EPS) == 6
    assert tau(10, 4, EPS) == 0
    assert not primitive("ABAB") and primitive("AAB") and primitive("A")
    assert canonical_rotation("BCA") == 2 and canonical_rotation("AAAA") == 0
