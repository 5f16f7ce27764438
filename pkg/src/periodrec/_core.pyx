# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. ``_fallback.py`` mirrors every function here."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t
from libc.stdlib cimport malloc, realloc, free

cnp.import_array()

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil

cdef int32_t INF = 2147483647


cdef void _induce(const int32_t[::1] s, int32_t[::1] sa, const uint8_t[::1] ls,
                  const int32_t[::1] sum_s, const int32_t[::1] sum_l, int32_t[::1] buf,
                  const int32_t[::1] lms, Py_ssize_t nlms, int upper) noexcept nogil:
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t i
    cdef int32_t v, d
    for i in range(n):
        sa[i] = -1
    for i in range(upper + 1):
        buf[i] = sum_s[i]
    for i in range(nlms):
        d = lms[i]
        if d == n:
            continue
        sa[buf[s[d]]] = d
        buf[s[d]] += 1
    for i in range(upper + 1):
        buf[i] = sum_l[i]
    sa[buf[s[n - 1]]] = <int32_t>(n - 1)
    buf[s[n - 1]] += 1
    for i in range(n):
        v = sa[i]
        if v >= 1 and not ls[v - 1]:
            sa[buf[s[v - 1]]] = v - 1
            buf[s[v - 1]] += 1
    for i in range(upper + 1):
        buf[i] = sum_l[i]
    for i in range(n - 1, -1, -1):
        v = sa[i]
        if v >= 1 and ls[v - 1]:
            buf[s[v - 1] + 1] -= 1
            sa[buf[s[v - 1] + 1]] = v - 1


cdef _sais(const int32_t[::1] s, int upper):
    # ls[i] = 1 for S-type suffixes; ordering places a proper prefix first
    cdef Py_ssize_t n = s.shape[0]
    sa_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] sa = sa_arr
    if n == 0:
        return sa_arr
    if n == 1:
        sa[0] = 0
        return sa_arr
    if n == 2:
        if s[0] < s[1]:
            sa[0] = 0
            sa[1] = 1
        else:
            sa[0] = 1
            sa[1] = 0
        return sa_arr

    ls_arr = np.zeros(n, dtype=np.uint8)
    sum_l_arr = np.zeros(upper + 2, dtype=np.int32)
    sum_s_arr = np.zeros(upper + 2, dtype=np.int32)
    buf_arr = np.empty(upper + 2, dtype=np.int32)
    lms_map_arr = np.full(n + 1, -1, dtype=np.int32)
    cdef uint8_t[::1] ls = ls_arr
    cdef int32_t[::1] sum_l = sum_l_arr
    cdef int32_t[::1] sum_s = sum_s_arr
    cdef int32_t[::1] buf = buf_arr
    cdef int32_t[::1] lms_map = lms_map_arr
    cdef Py_ssize_t i, m = 0, l, r, end_l, end_r
    cdef int rec_upper
    cdef bint same

    with nogil:
        for i in range(n - 2, -1, -1):
            ls[i] = ls[i + 1] if s[i] == s[i + 1] else (s[i] < s[i + 1])
        for i in range(n):
            if not ls[i]:
                sum_s[s[i]] += 1
            else:
                sum_l[s[i] + 1] += 1
        for i in range(upper + 1):
            sum_s[i] += sum_l[i]
            if i < upper:
                sum_l[i + 1] += sum_s[i]
        for i in range(1, n):
            if not ls[i - 1] and ls[i]:
                lms_map[i] = <int32_t>m
                m += 1

    lms_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] lms = lms_arr
    with nogil:
        m = 0
        for i in range(1, n):
            if not ls[i - 1] and ls[i]:
                lms[m] = <int32_t>i
                m += 1
        _induce(s, sa, ls, sum_s, sum_l, buf, lms, m, upper)
    if m == 0:
        return sa_arr

    sorted_arr = np.empty(m, dtype=np.int32)
    rec_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] sorted_lms = sorted_arr
    cdef int32_t[::1] rec_s = rec_arr
    cdef Py_ssize_t k = 0
    with nogil:
        for i in range(n):
            if lms_map[sa[i]] != -1:
                sorted_lms[k] = sa[i]
                k += 1
        rec_upper = 0
        rec_s[lms_map[sorted_lms[0]]] = 0
        for i in range(1, m):
            l = sorted_lms[i - 1]
            r = sorted_lms[i]
            end_l = lms[lms_map[l] + 1] if lms_map[l] + 1 < m else n
            end_r = lms[lms_map[r] + 1] if lms_map[r] + 1 < m else n
            same = True
            if end_l - l != end_r - r:
                same = False
            else:
                while l < end_l:
                    if s[l] != s[r]:
                        break
                    l += 1
                    r += 1
                if l == n or s[l] != s[r]:
                    same = False
            if not same:
                rec_upper += 1
            rec_s[lms_map[sorted_lms[i]]] = rec_upper

    rec_sa_arr = _sais(rec_s, rec_upper)
    cdef int32_t[::1] rec_sa = rec_sa_arr
    with nogil:
        for i in range(m):
            sorted_lms[i] = lms[rec_sa[i]]
        _induce(s, sa, ls, sum_s, sum_l, buf, sorted_lms, m, upper)
    return sa_arr


def suffix_array(const int32_t[::1] sym, int alpha):
    """Suffix array by induced sorting (SA-IS), linear time.

    ``sym`` holds values in ``[0, alpha)``; a shorter suffix sorts first
    when it is a prefix of a longer one.
    """
    return _sais(sym, alpha - 1)


def lcp_arrays(const int32_t[::1] sym, const int32_t[::1] sa):
    """Inverse suffix array and adjacent LCPs (entry t: suffixes sa[t], sa[t+1]).

    Permuted-LCP form of Kasai's algorithm: the text is scanned in order
    against each suffix's predecessor, then gathered into suffix order.
    """
    cdef Py_ssize_t m = sym.shape[0]
    rank_arr = np.empty(m, dtype=np.int32)
    out_arr = np.zeros(max(m - 1, 0), dtype=np.int32)
    if m == 0:
        return rank_arr, out_arr
    phi_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] rank = rank_arr
    cdef int32_t[::1] out = out_arr
    cdef int32_t[::1] phi = phi_arr
    cdef Py_ssize_t i, j, t, h = 0
    with nogil:
        phi[sa[0]] = -1
        rank[sa[0]] = 0
        for t in range(1, m):
            phi[sa[t]] = sa[t - 1]
            rank[sa[t]] = <int32_t>t
        # phi becomes PLCP in place: plcp[i] = lcp(i, predecessor of i)
        for i in range(m):
            j = phi[i]
            if j < 0:
                h = 0
                phi[i] = 0
                continue
            while i + h < m and j + h < m and sym[i + h] == sym[j + h]:
                h += 1
            phi[i] = <int32_t>h
            if h > 0:
                h -= 1
        for t in range(1, m):
            out[t - 1] = phi[sa[t]]
    return rank_arr, out_arr


cdef inline int32_t _range_min(const int32_t[::1] values, const int32_t[:, ::1] blocks,
                               int shift, Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    # min over values[lo:hi], hi > lo; blocks[l, b] = min of block minima b .. b + 2**l - 1
    cdef Py_ssize_t bl = lo >> shift
    cdef Py_ssize_t bh = (hi - 1) >> shift
    cdef Py_ssize_t t, stop
    cdef int lvl
    cdef int32_t best = values[lo]
    if bh - bl <= 1:
        for t in range(lo + 1, hi):
            if values[t] < best:
                best = values[t]
        return best
    stop = (bl + 1) << shift
    for t in range(lo + 1, stop):
        if values[t] < best:
            best = values[t]
    for t in range(bh << shift, hi):
        if values[t] < best:
            best = values[t]
    lvl = 63 - __builtin_clzll(<unsigned long long>(bh - bl - 1))
    if blocks[lvl, bl + 1] < best:
        best = blocks[lvl, bl + 1]
    if blocks[lvl, bh - (1 << lvl)] < best:
        best = blocks[lvl, bh - (1 << lvl)]
    return best


def range_min(const int32_t[::1] values, const int32_t[:, ::1] blocks, int shift,
              Py_ssize_t lo, Py_ssize_t hi):
    return _range_min(values, blocks, shift, lo, hi)


def kangaroo_frontier(Py_ssize_t n, Py_ssize_t p, Py_ssize_t k, const int32_t[::1] rank,
                      const int32_t[::1] values, const int32_t[:, ::1] blocks, int shift):
    """Frontier table D[0..k, 0..p-1] and the thresholded last row.

    Returns ``(frontier, last_row, queries)``; ``last_row[c] == -1`` marks a
    column whose value exceeds ``k``.
    """
    frontier_arr = np.empty((k + 1, p), dtype=np.int32)
    last_arr = np.full(p, -1, dtype=np.int64)
    cdef int32_t[:, ::1] D = frontier_arr
    cdef int64_t[::1] last = last_arr
    cdef Py_ssize_t d, j, jm, jp, i, c, a, b, lo, hi, reach
    cdef int64_t queries = 0
    cdef int32_t ext
    with nogil:
        for d in range(k + 1):
            for j in range(p):
                if d == 0:
                    i = 0
                else:
                    jm = j - 1 if j > 0 else p - 1
                    jp = j + 1 if j + 1 < p else 0
                    i = D[d - 1, j] + 1
                    if D[d - 1, jm] > i:
                        i = D[d - 1, jm]
                    if D[d - 1, jp] + 1 > i:
                        i = D[d - 1, jp] + 1
                    if i > n:
                        i = n
                queries += 1
                ext = 0
                if i < n:
                    c = (i + j) % p
                    a = rank[i]
                    b = rank[n + 1 + c]
                    lo = a if a < b else b
                    hi = b if a < b else a
                    ext = _range_min(values, blocks, shift, lo, hi)
                    if ext > n - i:
                        ext = <int32_t>(n - i)
                reach = i + ext
                D[d, j] = <int32_t>reach
                if reach == n:
                    c = (j + n) % p
                    if last[c] < 0:
                        last[c] = d
    return frontier_arr, last_arr, int(queries)


cdef struct Deque:
    int64_t* buf
    Py_ssize_t cap
    Py_ssize_t head
    Py_ssize_t size


cdef int _grow(Deque* q) except -1 nogil:
    cdef Py_ssize_t newcap = q.cap * 2
    cdef int64_t* nb = <int64_t*>realloc(q.buf, newcap * sizeof(int64_t))
    cdef Py_ssize_t t
    if nb == NULL:
        with gil:
            raise MemoryError()
    # unwrap the segment that wrapped past the old end
    for t in range(q.head):
        nb[q.cap + t] = nb[t]
    q.buf = nb
    q.cap = newcap
    return 0


cdef inline int _push_back(Deque* q, int64_t v) except -1 nogil:
    if q.size == q.cap:
        _grow(q)
    q.buf[(q.head + q.size) & (q.cap - 1)] = v
    q.size += 1
    return 0


cdef inline int _push_front(Deque* q, int64_t v) except -1 nogil:
    if q.size == q.cap:
        _grow(q)
    q.head = (q.head - 1) & (q.cap - 1)
    q.buf[q.head] = v
    q.size += 1
    return 0


cdef inline int64_t _pop_front(Deque* q) noexcept nogil:
    cdef int64_t v = q.buf[q.head]
    q.head = (q.head + 1) & (q.cap - 1)
    q.size -= 1
    return v


def wrap_table(const uint8_t[::1] s, const uint8_t[::1] pw):
    """Wrap-around table by multi-source 0/1 BFS, shape ``(n + 1, p)``."""
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t p = pw.shape[0]
    cdef Py_ssize_t cells = (n + 1) * p
    dist_arr = np.full(cells, INF, dtype=np.int32)
    done_arr = np.zeros(cells, dtype=np.uint8)
    cdef int32_t[::1] dist = dist_arr
    cdef uint8_t[::1] done = done_arr
    cdef Deque q
    cdef Py_ssize_t cap = 64
    while cap < 4 * p:
        cap *= 2
    q.buf = <int64_t*>malloc(cap * sizeof(int64_t))
    if q.buf == NULL:
        raise MemoryError()
    q.cap = cap
    q.head = 0
    q.size = 0
    cdef int64_t u, v
    cdef Py_ssize_t i, j, j1
    cdef int32_t du, nd
    try:
        with nogil:
            for j in range(p):
                dist[j] = 0
                _push_back(&q, j)
            while q.size > 0:
                u = _pop_front(&q)
                if done[u]:
                    continue
                done[u] = 1
                du = dist[u]
                i = u // p
                j = u - i * p
                j1 = j + 1 if j + 1 < p else 0
                # insertion: (i, j) -> (i, j+1)
                v = i * p + j1
                if du + 1 < dist[v]:
                    dist[v] = du + 1
                    _push_back(&q, v)
                if i < n:
                    # deletion: (i, j) -> (i+1, j)
                    v = u + p
                    if du + 1 < dist[v]:
                        dist[v] = du + 1
                        _push_back(&q, v)
                    # match / substitution: (i, j) -> (i+1, j+1)
                    v = (i + 1) * p + j1
                    if s[i] == pw[j]:
                        if du < dist[v]:
                            dist[v] = du
                            _push_front(&q, v)
                    else:
                        if du + 1 < dist[v]:
                            dist[v] = du + 1
                            _push_back(&q, v)
    finally:
        free(q.buf)
    return dist_arr.reshape(n + 1, p)
