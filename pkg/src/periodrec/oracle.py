"""Brute-force ground truth. Deliberately simple; meant for small inputs."""

from .lcp_index import InvalidInputError, as_symbols


def distance_matrix(a, b) -> list[list[int]]:
    """Classic ``(|a|+1) x (|b|+1)`` Levenshtein table."""
    a = as_symbols(a)
    b = as_symbols(b)
    rows = [list(range(len(b) + 1))]
    for x, ca in enumerate(a, 1):
        prev = rows[-1]
        row = [x]
        for y, cb in enumerate(b, 1):
            row.append(min(prev[y] + 1, row[y - 1] + 1, prev[y - 1] + (ca != cb)))
        rows.append(row)
    return rows


def edit_distance(a, b) -> int:
    a = as_symbols(a)
    b = as_symbols(b)
    prev = list(range(len(b) + 1))
    for x, ca in enumerate(a, 1):
        cur = [x]
        for y, cb in enumerate(b, 1):
            cur.append(min(prev[y] + 1, cur[y - 1] + 1, prev[y - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def ed_to_prefix(s, u) -> int:
    """``ED(s, u^inf)``: least edit distance from ``s`` to a prefix of ``u^inf``.

    Only prefixes up to ``2 |s|`` are tried; the empty prefix costs ``|s|``
    and anything longer costs more.  One DP against the longest prefix gives
    every shorter prefix in its last row.
    """
    s = as_symbols(s)
    u = as_symbols(u)
    if not u:
        raise InvalidInputError("period word must be nonempty")
    reps = 2 * len(s) // len(u) + 1
    w = (u * reps)[: 2 * len(s)]
    return min(distance_matrix(s, w)[-1])


def is_primitive(word) -> bool:
    word = as_symbols(word)
    p = len(word)
    return not any(p % q == 0 and word == word[:q] * (p // q) for q in range(1, p))


def brute_apr(s, params) -> set[tuple[bytes, int]]:
    """Every primitive subword ``P`` of ``s`` with ``ED(s, P^inf) < tau_p``.

    Approximate word-periods are always subwords of ``s`` under this
    threshold, so the enumeration is complete.
    """
    from .recovery import tau

    s = as_symbols(s)
    n = len(s)
    found = set()
    seen = set()
    for start in range(n):
        for end in range(start + 1, n + 1):
            word = s[start:end]
            if word in seen:
                continue
            seen.add(word)
            t = tau(n, len(word), params)
            if t < 1 or not is_primitive(word):
                continue
            d = ed_to_prefix(s, word)
            if d < t:
                found.add((word, d))
    return found
