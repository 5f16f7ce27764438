import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_lcp, naive_text_vs_periodic, sorted_suffixes
from periodrec.lcp_index import (
    CompositeText,
    InvalidInputError,
    SparseTable,
    build_index,
    lcp_suffixes,
    lcp_text_vs_periodic,
)

words = st.binary(min_size=0, max_size=40).map(lambda b: bytes(x % 3 + 65 for x in b))
periods = st.binary(min_size=1, max_size=6).map(lambda b: bytes(x % 3 + 65 for x in b))


def test_minimal_composite():
    text = CompositeText.build("A", "A")
    assert text.r == 2
    assert text.body == b"A#AA"
    assert len(text) == 4


def test_paper_composite_length():
    text = CompositeText.build("CBAACAABCA", "ABCA")
    assert text.r == 4
    assert len(text) == 27
    assert text.body == b"CBAACAABCA#" + b"ABCA" * 4


def test_separator_is_not_a_byte():
    # a literal '#' in the text must not collide with the separator
    text = CompositeText.build(b"#\x00\xff", b"#")
    assert list(text.codes).count(0) == 1
    assert text.codes[text.sentinel_pos] == 0
    assert min(text.codes[: text.n]) > 0


@given(words, periods)
def test_composite_invariants(s, p_word):
    text = CompositeText.build(s, p_word)
    n, p = len(s), len(p_word)
    assert len(text) == n + 1 + text.r * p
    assert text.r * p >= n + p
    assert (text.r - 1) * p < n + p or text.r == 1
    assert list(text.codes).count(0) == 1 and text.codes[n] == 0


def test_empty_period_rejected():
    with pytest.raises(InvalidInputError):
        build_index("AB", "")


def test_suffix_order_matches_full_sort(backend):
    rng = random.Random(11)
    for _ in range(150):
        s = bytes(rng.choice(b"AB") for _ in range(rng.randint(0, 90)))
        p_word = bytes(rng.choice(b"ABC") for _ in range(rng.randint(1, 7)))
        idx = build_index(s, p_word, backend=backend)
        assert len(idx.text) <= 200
        assert idx.suffix_order.tolist() == sorted_suffixes(idx.text.codes)
        assert (idx.rank[idx.suffix_order] == np.arange(len(idx.text))).all()
        codes = idx.text.codes.tolist()
        sa = idx.suffix_order.tolist()
        naive = [naive_lcp(codes[sa[t]:], codes[sa[t + 1]:]) for t in range(len(sa) - 1)]
        assert idx.adjacent_lcp.tolist() == naive


def test_banana():
    idx = build_index("banana", "x")
    assert lcp_suffixes(idx, 1, 3) == 3
    assert lcp_suffixes(idx, 0, 0) == len(idx.text)
    assert lcp_suffixes(idx, len(idx.text), 2) == 0
    with pytest.raises(InvalidInputError):
        lcp_suffixes(idx, -1, 2)
    with pytest.raises(InvalidInputError):
        lcp_suffixes(idx, 0, len(idx.text) + 1)


def test_lcp_suffixes_random(backend):
    rng = random.Random(5)
    for _ in range(20):
        s = bytes(rng.choice(b"ACGT") for _ in range(rng.randint(50, 250)))
        idx = build_index(s, s[:3] or b"A", backend=backend)
        codes = idx.text.codes.tolist()
        m = len(codes)
        for _ in range(200):
            a, b = rng.randrange(m + 1), rng.randrange(m + 1)
            got = lcp_suffixes(idx, a, b)
            assert got == naive_lcp(codes[a:], codes[b:])
            assert got == lcp_suffixes(idx, b, a)
            if a < m and b < m:
                assert (got > 0) == (codes[a] == codes[b])


def test_text_vs_periodic_paper_example():
    idx = build_index("CBAACAABCA", "ABCA")
    assert lcp_text_vs_periodic(idx, 6, 0) == 4
    assert lcp_text_vs_periodic(idx, 10, 2) == 0
    with pytest.raises(InvalidInputError):
        lcp_text_vs_periodic(idx, 11, 0)
    with pytest.raises(InvalidInputError):
        lcp_text_vs_periodic(idx, 0, 4)


def test_text_vs_periodic_exhaustive(backend):
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(0, 100)
        s = bytes(rng.choice(b"AB") for _ in range(n))
        p_word = bytes(rng.choice(b"AB") for _ in range(rng.randint(1, 6)))
        if rng.random() < 0.5:
            s = (p_word * (n // len(p_word) + 1))[:n]
        idx = build_index(s, p_word, backend=backend)
        for i in range(n + 1):
            for j in range(len(p_word)):
                assert lcp_text_vs_periodic(idx, i, j) == naive_text_vs_periodic(s, p_word, i, j)


@settings(max_examples=60, deadline=None)
@given(words, periods, st.data())
def test_text_vs_periodic_property(s, p_word, data):
    idx = build_index(s, p_word)
    i = data.draw(st.integers(0, len(s)))
    j = data.draw(st.integers(0, len(p_word) - 1))
    assert lcp_text_vs_periodic(idx, i, j) == naive_text_vs_periodic(s, p_word, i, j)


@pytest.mark.parametrize("size", [1, 2, 31, 32, 33, 64, 65, 100, 1000])
def test_range_min_matches_scan(size, backend):
    rng = np.random.default_rng(size)
    values = rng.integers(0, 50, size).astype(np.int32)
    table = SparseTable(values, backend=backend)
    pairs = [(lo, hi) for lo in range(size) for hi in range(lo + 1, size + 1)]
    if len(pairs) > 3000:
        pairs = [pairs[t] for t in rng.choice(len(pairs), 3000, replace=False)]
    for lo, hi in pairs:
        assert table.query(lo, hi) == values[lo:hi].min()
    with pytest.raises(InvalidInputError):
        table.query(0, 0)
