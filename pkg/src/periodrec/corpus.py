"""Seeded periodic corpora with random edits.

Randomness comes from SplitMix64 (state += 0x9E3779B97F4A7C15, then the
xor-shift/multiply finaliser with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB),
so output depends only on the arguments, never on the platform or on
Python's ``random`` module.

Alphabets of up to 26 symbols are the letters ``A, B, ...``; larger ones are
the byte values ``0 .. size-1``.
"""

from dataclasses import dataclass

from .lcp_index import InvalidInputError, as_symbols
from .recovery import primitive

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def alphabet(size: int) -> bytes:
    if not 1 <= size <= 256:
        raise InvalidInputError(f"alphabet size must be in 1..256, got {size}")
    if size <= 26:
        return bytes(range(ord("A"), ord("A") + size))
    return bytes(range(size))


@dataclass(frozen=True)
class GenSpec:
    p: int
    n: int
    edits: int = 0
    alphabet_size: int = 4
    seed: int = 0

    def validate(self):
        if self.p < 1 or self.n < self.p or self.edits < 0:
            raise InvalidInputError(f"invalid spec {self}")
        alphabet(self.alphabet_size)
        if self.alphabet_size == 1 and self.p > 1:
            raise InvalidInputError("no primitive word of length > 1 over a unary alphabet")


def gen_periodic(spec: GenSpec) -> bytes:
    """Length-``n`` prefix of ``P^inf`` for a random primitive ``P`` of length ``p``."""
    spec.validate()
    rng = SplitMix64(spec.seed)
    sigma = alphabet(spec.alphabet_size)
    while True:
        word = bytes(sigma[rng.below(len(sigma))] for _ in range(spec.p))
        if primitive(word):
            break
    reps = -(-spec.n // spec.p)
    return (word * reps)[: spec.n]


def inject_edits(s, edits: int, seed: int, alphabet_size: int = 26) -> bytes:
    """Apply ``edits`` random insert/delete/substitute operations in sequence."""
    out = bytearray(as_symbols(s))
    sigma = alphabet(alphabet_size)
    rng = SplitMix64(seed)
    done = 0
    while done < edits:
        op = rng.below(3)
        if op == 0:
            out.insert(rng.below(len(out) + 1), sigma[rng.below(len(sigma))])
        elif not out:
            continue
        elif op == 1:
            del out[rng.below(len(out))]
        else:
            out[rng.below(len(out))] = sigma[rng.below(len(sigma))]
        done += 1
    return bytes(out)


def generate(spec: GenSpec) -> bytes:
    """Periodic text plus ``spec.edits`` edits; the edit stream is seeded with ``seed + 1``."""
    base = gen_periodic(spec)
    return inject_edits(base, spec.edits, (spec.seed + 1) & MASK64, spec.alphabet_size)
