"""Longest-common-prefix queries between suffixes of a text and of ``P^inf``.

The indexed word is ``S # P^r`` with ``r`` the least positive integer such
that ``r * p >= n + p``.  Symbols are bytes; the separator is not a byte
value but a code smaller than every byte (codes are ``byte + 1``, separator
``0``), so inputs keep all 256 symbols.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels


class InvalidInputError(ValueError):
    """Raised for arguments outside an operation's domain."""


def as_symbols(word) -> bytes:
    """Coerce ``str``/``bytes``/``bytearray``/iterable of ints to bytes."""
    if isinstance(word, str):
        return word.encode("utf-8")
    return bytes(word)


SEPARATOR_CODE = 0
ALPHABET_CODES = 257


@dataclass(frozen=True)
class CompositeText:
    text: bytes
    period: bytes
    r: int
    codes: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def p(self) -> int:
        return len(self.period)

    @property
    def sentinel_pos(self) -> int:
        return self.n

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def body(self) -> bytes:
        """Printable rendering; ``#`` stands in for the separator."""
        return self.text + b"#" + self.period * self.r

    @classmethod
    def build(cls, s, p_word) -> "CompositeText":
        s = as_symbols(s)
        p_word = as_symbols(p_word)
        if not p_word:
            raise InvalidInputError("period word must be nonempty")
        n, p = len(s), len(p_word)
        r = max(1, -(-(n + p) // p))
        codes = np.empty(n + 1 + r * p, dtype=np.int32)
        codes[:n] = np.frombuffer(s, dtype=np.uint8)
        codes[n] = -1
        codes[n + 1:] = np.tile(np.frombuffer(p_word, dtype=np.uint8), r)
        codes += 1
        return cls(s, p_word, r, codes)


class SparseTable:
    """Range minimum over a fixed int array with O(1) queries and O(m) space.

    Values are grouped in blocks of ``2**shift``; ``blocks[l, b]`` is the
    minimum over blocks ``b .. b + 2**l - 1``.  A query scans at most two
    partial blocks and reads two table entries.
    """

    shift = 5

    def __init__(self, values, backend=None):
        values = np.ascontiguousarray(values, dtype=np.int32)
        width = 1 << self.shift
        nblocks = max(1, -(-len(values) // width))
        padded = np.full(nblocks * width, np.iinfo(np.int32).max, dtype=np.int32)
        padded[: len(values)] = values
        block_min = padded.reshape(nblocks, width).min(axis=1)
        levels = nblocks.bit_length()
        table = np.empty((levels, nblocks), dtype=np.int32)
        table[0] = block_min
        for lvl in range(1, levels):
            half = 1 << (lvl - 1)
            span = nblocks - 2 * half + 1
            np.minimum(table[lvl - 1, :span], table[lvl - 1, half:half + span], out=table[lvl, :span])
            table[lvl, span:] = table[lvl - 1, span:]
        self.values = values
        self.table = table
        self._kernels = _kernels.get(backend)

    def __len__(self):
        return len(self.values)

    def query(self, lo: int, hi: int) -> int:
        """Minimum of ``values[lo:hi]``; requires ``lo < hi``."""
        if not 0 <= lo < hi <= len(self.values):
            raise InvalidInputError(f"bad range [{lo}, {hi})")
        return int(self._kernels.range_min(self.values, self.table, self.shift, lo, hi))


@dataclass(frozen=True)
class LcpIndex:
    text: CompositeText
    suffix_order: np.ndarray = field(repr=False)
    rank: np.ndarray = field(repr=False)
    adjacent_lcp: np.ndarray = field(repr=False)
    range_min: SparseTable = field(repr=False)

    def lcp_suffixes(self, a: int, b: int) -> int:
        return lcp_suffixes(self, a, b)

    def lcp_text_vs_periodic(self, i: int, j: int) -> int:
        return lcp_text_vs_periodic(self, i, j)


def build_index(s, p_word, backend=None) -> LcpIndex:
    """Suffix array, inverse permutation, adjacent LCPs and a range-min table."""
    text = CompositeText.build(s, p_word)
    kernels = _kernels.get(backend)
    sa = kernels.suffix_array(text.codes, ALPHABET_CODES)
    rank, adjacent = kernels.lcp_arrays(text.codes, sa)
    return LcpIndex(text, sa, rank, adjacent, SparseTable(adjacent, backend))


def lcp_suffixes(idx: LcpIndex, a: int, b: int) -> int:
    m = len(idx.text)
    if not (0 <= a <= m and 0 <= b <= m):
        raise InvalidInputError(f"positions must lie in [0, {m}]")
    if a == b:
        return m - a
    if a == m or b == m:
        return 0
    ra, rb = int(idx.rank[a]), int(idx.rank[b])
    if ra > rb:
        ra, rb = rb, ra
    return idx.range_min.query(ra, rb)


def lcp_text_vs_periodic(idx: LcpIndex, i: int, j: int) -> int:
    """``lcp(S[i:], P^inf[j:])`` clamped to ``n - i``."""
    n, p = idx.text.n, idx.text.p
    if not 0 <= i <= n:
        raise InvalidInputError(f"text position {i} outside [0, {n}]")
    if not 0 <= j < p:
        raise InvalidInputError(f"residue {j} outside [0, {p})")
    if i == n:
        return 0
    return min(lcp_suffixes(idx, i, n + 1 + j), n - i)
