"""Independent brute-force references used only by the tests."""

import itertools

import numpy as np


def naive_lcp(a, b) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


def sorted_suffixes(codes) -> list[int]:
    codes = list(codes)
    return sorted(range(len(codes)), key=lambda i: codes[i:])


def periodic_prefix(word: bytes, length: int) -> bytes:
    return (word * (length // len(word) + 1))[:length]


def naive_text_vs_periodic(s: bytes, word: bytes, i: int, j: int) -> int:
    rest = s[i:]
    return naive_lcp(rest, periodic_prefix(word[j:] + word[:j], len(rest)))


def rotations(word: bytes) -> list[bytes]:
    return [word[j:] + word[:j] for j in range(len(word))]


def all_words(alphabet: bytes, length: int):
    for tup in itertools.product(alphabet, repeat=length):
        yield bytes(tup)


def definition_tables(texts: np.ndarray, word: bytes) -> np.ndarray:
    """Wrap-around tables straight from the definition, for a batch of texts.

    ``texts`` is ``(B, n)`` uint8.  For every window start ``a`` of ``P^inf``
    one Levenshtein DP of ``S`` against ``P^inf[a : a + 2n]`` gives
    ``ed(S[:i], P^inf[a : a + L])`` for all ``i, L``; a window of length
    ``L`` ends at residue ``a + L - 1``, i.e. it belongs to column
    ``(a + L) mod p``.  Windows longer than ``2i`` are never better than the
    empty one.
    """
    batch, n = texts.shape
    p = len(word)
    out = np.full((batch, n + 1, p), np.iinfo(np.int32).max, dtype=np.int64)
    for start in range(p):
        window = np.frombuffer(periodic_prefix(word[start:] + word[:start], 2 * n), dtype=np.uint8)
        prev = np.tile(np.arange(2 * n + 1), (batch, 1))
        out[:, 0, start] = 0
        for i in range(1, n + 1):
            cur = np.empty_like(prev)
            cur[:, 0] = i
            mismatch = texts[:, i - 1][:, None] != window[None, :]
            for L in range(1, 2 * n + 1):
                cur[:, L] = np.minimum(
                    np.minimum(prev[:, L], cur[:, L - 1]) + 1,
                    prev[:, L - 1] + mismatch[:, L - 1],
                )
            for L in range(2 * i + 1):
                c = (start + L) % p
                out[:, i, c] = np.minimum(out[:, i, c], cur[:, L])
            prev = cur
    return out
