"""Approximate period recovery under edit distance.

A primitive word ``P`` of length ``p`` is reported when some prefix of
``P^inf`` lies within edit distance ``tau_p - 1`` of ``S``, where
``tau_p = floor(n / ((3.75 + eps) p))``.

Candidates come from a pigeonhole argument: cut ``S`` into ``t = tau_p``
disjoint blocks of length ``L = n // t``.  An alignment with at most
``t - 1`` edits leaves some block untouched, so that block is a subword of
``P^inf``; since ``L > p`` its first ``p`` letters are a rotation of ``P``.
Every rotation of every candidate is then scored at once with
:func:`periodrec.kangaroo.rotation_distances`.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .kangaroo import rotation_distances
from .lcp_index import InvalidInputError, as_symbols


@dataclass(frozen=True)
class RecoveryParams:
    epsilon_num: int = 1
    epsilon_den: int = 20

    def __post_init__(self):
        if self.epsilon_num < 1 or self.epsilon_den < 1:
            raise InvalidInputError("epsilon must be a positive fraction")

    @classmethod
    def parse(cls, text: str) -> "RecoveryParams":
        """Accept ``"num/den"`` or a decimal such as ``"0.05"``."""
        try:
            eps = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"cannot parse epsilon {text!r}") from None
        if eps <= 0:
            raise InvalidInputError("epsilon must be positive")
        return cls(eps.numerator, eps.denominator)

    @property
    def epsilon(self) -> Fraction:
        return Fraction(self.epsilon_num, self.epsilon_den)

    # 3.75 + eps == factor_num / factor_den
    @property
    def factor_num(self) -> int:
        return 15 * self.epsilon_den + 4 * self.epsilon_num

    @property
    def factor_den(self) -> int:
        return 4 * self.epsilon_den

    def __str__(self):
        return f"{self.epsilon_num}/{self.epsilon_den}"


@dataclass(frozen=True)
class RotationClass:
    canonical: bytes
    block: int
    offset: int

    @property
    def p(self) -> int:
        return len(self.canonical)


@dataclass(frozen=True, order=True)
class PeriodReport:
    p: int
    word: bytes
    distance: int
    tau: int
    provenance: tuple[int, int] = (0, 0)

    def as_dict(self) -> dict:
        return {
            "word": self.word.decode("latin-1"),
            "p": self.p,
            "distance": self.distance,
            "tau": self.tau,
        }


def tau(n: int, p: int, params: RecoveryParams) -> int:
    """``floor(n / ((3.75 + eps) * p))`` in exact integer arithmetic."""
    return (n * params.factor_den) // (params.factor_num * p)


def max_period(n: int, params: RecoveryParams) -> int:
    """Largest ``p`` with ``tau(n, p) >= 1``, 0 when there is none."""
    return (n * params.factor_den) // params.factor_num


def border_lengths(word: bytes) -> list[int]:
    """KMP failure function: ``fail[i]`` is the longest proper border of ``word[:i+1]``."""
    fail = [0] * len(word)
    k = 0
    for i in range(1, len(word)):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    return fail


def primitive(word) -> bool:
    word = as_symbols(word)
    if not word:
        raise InvalidInputError("primitivity is undefined for the empty word")
    p = len(word)
    q = p - border_lengths(word)[-1]
    return q == p or p % q != 0


def canonical_rotation(word) -> int:
    """Offset of the least rotation (Booth); ties go to the smallest offset."""
    word = as_symbols(word)
    if not word:
        raise InvalidInputError("empty word has no rotation")
    doubled = word + word
    fail = [-1] * len(doubled)
    best = 0
    for j in range(1, len(doubled)):
        c = doubled[j]
        i = fail[j - best - 1]
        while i != -1 and c != doubled[best + i + 1]:
            if c < doubled[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if c != doubled[best + i + 1]:
            # here i == -1
            if c < doubled[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    # Booth may land on a later copy of a periodic word's least rotation
    return best % _smallest_period(word)


def _smallest_period(word: bytes) -> int:
    q = len(word) - border_lengths(word)[-1]
    return q if len(word) % q == 0 else len(word)


def rotate(word: bytes, j: int) -> bytes:
    return word[j:] + word[:j]


def candidate_rotation_classes(s, p: int, params: RecoveryParams) -> list[RotationClass]:
    """Primitive rotation classes of the length-``p`` prefixes of the blocks.

    Ordered by first block of appearance.
    """
    s = as_symbols(s)
    n = len(s)
    t = tau(n, p, params)
    if t < 1:
        raise InvalidInputError(f"tau is 0 for n={n}, p={p}; no period of this length is possible")
    block_len = n // t
    classes = {}
    for b in range(t):
        head = s[b * block_len: b * block_len + p]
        if not primitive(head):
            continue
        off = canonical_rotation(head)
        canon = rotate(head, off)
        if canon not in classes:
            classes[canon] = RotationClass(canon, b, off)
    return list(classes.values())


def _verify(s: bytes, cls: RotationClass, t: int, backend) -> list[PeriodReport]:
    dists = rotation_distances(s, cls.canonical, t - 1, backend=backend)
    p = cls.p
    out = []
    for j, d in enumerate(dists):
        if d is not None and d < t:
            # provenance: rotation offset relative to the block's own prefix
            out.append(PeriodReport(p, rotate(cls.canonical, j), d, t, (cls.block, (cls.offset + j) % p)))
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("PERIODREC_JOBS", "1")))
    except ValueError:
        return 1


def recover(s, params: RecoveryParams = RecoveryParams(), jobs: int = 1, backend=None) -> list[PeriodReport]:
    """All approximate word-periods of ``s``, sorted by ``(p, word)``."""
    s = as_symbols(s)
    n = len(s)
    tasks = []
    for p in range(1, max_period(n, params) + 1):
        t = tau(n, p, params)
        for cls in candidate_rotation_classes(s, p, params):
            tasks.append((cls, t))

    def run(task):
        return _verify(s, task[0], task[1], backend)

    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(run, tasks))
    else:
        batches = [run(task) for task in tasks]

    reports = {}
    for batch in batches:
        for rep in batch:
            reports.setdefault(rep.word, rep)
    return sorted(reports.values(), key=lambda r: (r.p, r.word))
