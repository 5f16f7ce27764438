"""Pure Python / numpy versions of the kernels in ``_core.pyx``.

Same signatures and return types; used when the extension is not built or
when ``PERIODREC_PURE=1`` is set.
"""

from collections import deque

import numpy as np


def suffix_array(sym, alpha):
    """Prefix doubling; each round sorts on a packed (rank, next rank) key."""
    sym = np.asarray(sym, dtype=np.int64)
    m = len(sym)
    if m == 0:
        return np.empty(0, dtype=np.int32)
    order = np.argsort(sym, kind="stable")
    rank = np.empty(m, dtype=np.int64)
    keys = sym[order]
    rank[order] = np.concatenate(([0], np.cumsum(keys[1:] != keys[:-1])))
    h = 1
    while rank.max() < m - 1:
        second = np.full(m, 0, dtype=np.int64)
        second[: m - h] = rank[h:] + 1
        packed = rank * (m + 1) + second
        order = np.argsort(packed, kind="stable")
        keys = packed[order]
        rank[order] = np.concatenate(([0], np.cumsum(keys[1:] != keys[:-1])))
        h *= 2
    return order.astype(np.int32)


def lcp_arrays(sym, sa):
    sym = np.asarray(sym).tolist()
    sa_list = np.asarray(sa).tolist()
    m = len(sym)
    rank = [0] * m
    for t, pos in enumerate(sa_list):
        rank[pos] = t
    out = [0] * max(m - 1, 0)
    h = 0
    for i in range(m):
        r = rank[i]
        if r == m - 1:
            h = 0
            continue
        j = sa_list[r + 1]
        while i + h < m and j + h < m and sym[i + h] == sym[j + h]:
            h += 1
        out[r] = h
        if h > 0:
            h -= 1
    return np.asarray(rank, dtype=np.int32), np.asarray(out, dtype=np.int32)


def range_min(values, blocks, shift, lo, hi):
    bl, bh = lo >> shift, (hi - 1) >> shift
    if bh - bl <= 1:
        return int(min(values[lo:hi]))
    best = min(min(values[lo:(bl + 1) << shift]), min(values[bh << shift:hi]))
    lvl = (bh - bl - 1).bit_length() - 1
    return int(min(best, blocks[lvl][bl + 1], blocks[lvl][bh - (1 << lvl)]))


def kangaroo_frontier(n, p, k, rank, values, blocks, shift):
    rank = np.asarray(rank).tolist()
    values = np.asarray(values).tolist()
    blocks = [np.asarray(row).tolist() for row in blocks]

    def text_vs_periodic(i, c):
        if i >= n:
            return 0
        a, b = rank[i], rank[n + 1 + c]
        lo, hi = (a, b) if a < b else (b, a)
        return min(range_min(values, blocks, shift, lo, hi), n - i)

    frontier = []
    last = [-1] * p
    queries = 0
    prev = None
    for d in range(k + 1):
        row = [0] * p
        for j in range(p):
            if d == 0:
                i = 0
            else:
                i = min(n, max(prev[j] + 1, prev[j - 1], prev[(j + 1) % p] + 1))
            queries += 1
            reach = i + text_vs_periodic(i, (i + j) % p)
            row[j] = reach
            if reach == n:
                c = (j + n) % p
                if last[c] < 0:
                    last[c] = d
        if prev is not None:
            assert all(x >= y for x, y in zip(row, prev)), "frontier must be monotone in d"
        frontier.append(row)
        prev = row
    return (
        np.asarray(frontier, dtype=np.int32).reshape(k + 1, p),
        np.asarray(last, dtype=np.int64),
        queries,
    )


def wrap_table(s, pw):
    s = bytes(s)
    pw = bytes(pw)
    n, p = len(s), len(pw)
    inf = 2**31 - 1
    dist = [inf] * ((n + 1) * p)
    done = bytearray((n + 1) * p)
    queue = deque(range(p))
    for j in range(p):
        dist[j] = 0
    while queue:
        u = queue.popleft()
        if done[u]:
            continue
        done[u] = 1
        du = dist[u]
        i, j = divmod(u, p)
        j1 = j + 1 if j + 1 < p else 0
        v = i * p + j1
        if du + 1 < dist[v]:
            dist[v] = du + 1
            queue.append(v)
        if i < n:
            v = u + p
            if du + 1 < dist[v]:
                dist[v] = du + 1
                queue.append(v)
            v = (i + 1) * p + j1
            if s[i] == pw[j]:
                if du < dist[v]:
                    dist[v] = du
                    queue.appendleft(v)
            elif du + 1 < dist[v]:
                dist[v] = du + 1
                queue.append(v)
    return np.asarray(dist, dtype=np.int32).reshape(n + 1, p)
