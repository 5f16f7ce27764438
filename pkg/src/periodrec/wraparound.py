"""Full wrap-around table: ``T[i, j]`` is the least edit distance between
``S[:i]`` and a subword of ``P^inf`` whose last letter sits at residue
``j - 1 (mod p)``.

Cells form a graph with arcs ``(i, j) -> (i+1, j)`` (cost 1),
``(i, j) -> (i+1, j+1)`` (cost ``S[i] != P[j]``) and ``(i, j) -> (i, j+1)``
(cost 1), column arithmetic mod ``p``.  ``T`` is the multi-source shortest
path distance from row 0, evaluated with a 0/1 BFS.  Memory is ``O(n p)``.
"""

import numpy as np

from . import _kernels
from .lcp_index import InvalidInputError, as_symbols
from .oracle import edit_distance


def full_table(s, p_word, backend=None) -> np.ndarray:
    """The ``(n + 1) x p`` table as an int32 array."""
    s = as_symbols(s)
    p_word = as_symbols(p_word)
    if not p_word:
        raise InvalidInputError("period word must be nonempty")
    kernels = _kernels.get(backend)
    return kernels.wrap_table(np.frombuffer(s, dtype=np.uint8), np.frombuffer(p_word, dtype=np.uint8))


def last_row(s, p_word, backend=None) -> list[int]:
    return [int(x) for x in full_table(s, p_word, backend)[-1]]


def min_distance_any_rotation(table: np.ndarray) -> int:
    """``min_U ED(S, U^inf)`` over rotations ``U`` of the period word."""
    return int(table[-1].min())


def recurrence_fixpoint(table: np.ndarray, s, p_word) -> bool:
    """True when one sweep of the cell recurrence changes nothing."""
    s = as_symbols(s)
    p_word = as_symbols(p_word)
    n, p = len(s), len(p_word)
    if table.shape != (n + 1, p) or (table[0] != 0).any():
        return False
    for i in range(n):
        for j in range(p):
            j1 = (j + 1) % p
            best = min(
                table[i, j1] + 1,
                table[i, j] + (s[i] != p_word[j]),
                table[i + 1, j] + 1,
            )
            if best != table[i + 1, j1]:
                return False
    return True


def definition_check(s, p_word, i: int, j: int) -> int:
    """Evaluate one cell straight from its definition.

    Minimises ``ed(S[:i], W)`` over windows ``W`` of ``P^inf`` that start at
    some residue and end at residue ``j - 1``.  Windows longer than ``2 i``
    cannot win since the empty window already costs ``i``.
    """
    s = as_symbols(s)
    p_word = as_symbols(p_word)
    n, p = len(s), len(p_word)
    if not p_word:
        raise InvalidInputError("period word must be nonempty")
    if not (0 <= i <= n and 0 <= j < p):
        raise InvalidInputError(f"cell ({i}, {j}) outside table {n + 1}x{p}")
    prefix = s[:i]
    periodic = p_word * (2 * i // p + 3)
    best = i
    for start in range(p):
        for length in range(1, 2 * i + 1):
            if (start + length - 1) % p != (j - 1) % p:
                continue
            best = min(best, edit_distance(prefix, periodic[start:start + length]))
    return best
