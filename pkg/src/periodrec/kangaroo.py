"""Thresholded last row of the wrap-around table in ``O(n + k p)`` time.

Diagonal ``j`` is the cell family ``T[i, (i + j) mod p]``; values along it
never decrease, so the cells within cost ``d`` form a prefix of it whose end
is ``D[d, j]``.  Each level is obtained from the previous one by one
cost-1 step (stay on the diagonal, or move to a neighbouring one) followed
by a free run of matches measured with a single lcp query.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .lcp_index import InvalidInputError, LcpIndex, as_symbols, build_index


@dataclass(frozen=True)
class ApmOutcome:
    """``per_column[j]`` is ``T[n, j]`` when at most ``k``, else ``None``."""

    k: int
    per_column: tuple[Optional[int], ...]
    frontier: np.ndarray = field(repr=False, compare=False)
    lcp_queries: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.per_column)


def _check(p_word, k):
    if not p_word:
        raise InvalidInputError("period word must be nonempty")
    if k < 0:
        raise InvalidInputError(f"threshold must be >= 0, got {k}")


def last_row_thresholded(s, p_word, k: int, backend=None, index: Optional[LcpIndex] = None) -> ApmOutcome:
    """All values ``T[n, j] <= k``; larger ones are reported as ``None``.

    ``frontier[d, j]`` holds ``D[d, j]``, the deepest row of diagonal ``j``
    reachable within cost ``d``.
    """
    s = as_symbols(s)
    p_word = as_symbols(p_word)
    _check(p_word, k)
    if index is None:
        index = build_index(s, p_word, backend=backend)
    kernels = _kernels.get(backend)
    rmq = index.range_min
    frontier, last, queries = kernels.kangaroo_frontier(
        len(s), len(p_word), int(k), index.rank, rmq.values, rmq.table, rmq.shift
    )
    per_column = tuple(int(v) if v >= 0 else None for v in last)
    return ApmOutcome(int(k), per_column, frontier, queries)


def rotation_distances(s, p_word, k: int, backend=None) -> list[Optional[int]]:
    """``ED(S, (P[j:] + P[:j])^inf)`` for every rotation start ``j``, or ``None`` above ``k``.

    Runs the thresholded last row on the reversed words: column ``(p - j) mod p``
    of the reversed table is the distance for rotation start ``j``.
    """
    s = as_symbols(s)
    p_word = as_symbols(p_word)
    _check(p_word, k)
    p = len(p_word)
    rev = last_row_thresholded(s[::-1], p_word[::-1], k, backend=backend)
    return [rev.per_column[(p - j) % p] for j in range(p)]
