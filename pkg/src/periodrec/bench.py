"""Timing harness for the two APM engines on seeded periodic corpora."""

import statistics
import time

from .corpus import GenSpec, gen_periodic, generate
from .kangaroo import last_row_thresholded
from .wraparound import full_table

ENGINES = ("kangaroo", "full")


def corpus(n: int, p: int, edits: int = 8, sigma: int = 4, seed: int = 0) -> tuple[bytes, bytes]:
    """``(text, period word)``: the clean period word and an edited periodic text."""
    spec = GenSpec(p=p, n=n, edits=edits, alphabet_size=sigma, seed=seed)
    return generate(spec), gen_periodic(spec)[:p]


def run_engine(engine: str, text: bytes, word: bytes, k: int, backend=None):
    if engine == "kangaroo":
        return last_row_thresholded(text, word, k, backend=backend)
    if engine == "full":
        return full_table(text, word, backend=backend)
    raise ValueError(f"unknown engine {engine!r}")


def time_engine(engine, text, word, k, runs=3, backend=None) -> int:
    """Median wall time in nanoseconds over ``runs`` calls (monotonic clock)."""
    samples = []
    for _ in range(runs):
        start = time.perf_counter_ns()
        run_engine(engine, text, word, k, backend)
        samples.append(time.perf_counter_ns() - start)
    return int(statistics.median(samples))


def bench(sizes, p, k, engines=ENGINES, seed=0, runs=3, edits=8, sigma=4, backend=None):
    """Yield ``(engine, n, p, k, nanoseconds)`` rows."""
    for n in sizes:
        text, word = corpus(n, p, edits, sigma, seed)
        for engine in engines:
            yield engine, n, p, k, time_engine(engine, text, word, k, runs, backend)
