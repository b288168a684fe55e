#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot kernels: the subsequence-count dynamic program and the
pairwise-projection merge.  Run from the repository root:

    python3 benchmarks/bench_backends.py
"""

from __future__ import annotations

import random
import time
from array import array

from wordbinom import _pure

try:
    from wordbinom import _kernels
except ImportError:
    _kernels = None


def timed(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def bench_count(rng):
    # sizes chosen so every DP intermediate stays within 64 bits, the regime
    # the dispatcher routes to the kernel
    w = tuple(rng.randrange(4) for _ in range(1000))
    u = tuple(rng.randrange(4) for _ in range(6))
    results = {"pure": timed(lambda: _pure.count_scattered(w, u), 20)}
    if _kernels is not None:
        wb, ub = bytes(w), bytes(u)
        assert _kernels.count_scattered_u64(wb, ub) == _pure.count_scattered(w, u)
        results["compiled"] = timed(lambda: _kernels.count_scattered_u64(wb, ub), 20)
    return "count |w|=1000 |u|=6", results


def bench_merge(rng):
    q, n = 10, 200_000
    letters = [rng.randrange(q) for _ in range(n)]
    counts = [letters.count(c) for c in range(q)]
    pair_words = [
        tuple(c for c in letters if c in (a, b))
        for a in range(q)
        for b in range(a + 1, q)
    ]
    results = {"pure": timed(lambda: _pure.merge_pairwise(q, pair_words, counts), 3)}
    if _kernels is not None:
        blob = b"".join(bytes(word) for word in pair_words)
        offsets = array("q", [0])
        for word in pair_words:
            offsets.append(offsets[-1] + len(word))
        counts_arr = array("q", counts)
        merged = _kernels.merge_pairwise(q, blob, offsets, counts_arr)
        assert list(merged) == _pure.merge_pairwise(q, pair_words, counts)
        results["compiled"] = timed(
            lambda: _kernels.merge_pairwise(q, blob, offsets, counts_arr), 3
        )
    return f"merge q={q} n={n}", results


def report(label, results):
    line = f"{label:28s}"
    for name, seconds in results.items():
        line += f"  {name}: {seconds * 1000:9.2f} ms"
    if "compiled" in results:
        line += f"  speedup: {results['pure'] / results['compiled']:6.1f}x"
    print(line)


def main():
    if _kernels is None:
        print("compiled kernels not available; timing the pure fallback only")
    rng = random.Random(99)
    for bench in (bench_count, bench_merge):
        report(*bench(rng))


if __name__ == "__main__":
    main()
