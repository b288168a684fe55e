"""Selects the compiled kernel core at import time, pure fallback otherwise.

Set ``WORDBINOM_PURE=1`` in the environment to force the pure backend even
when the extension is importable (used by the benchmark and parity tests).
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from . import _pure

try:
    from . import _kernels
except ImportError:  # extension not built; stay on the fallback
    _kernels = None

if os.environ.get("WORDBINOM_PURE"):
    _kernels = None

BACKEND = "compiled" if _kernels is not None else "pure"

_U64_MAX = (1 << 64) - 1


def _fits_u64(n: int, m: int) -> bool:
    """True when every DP intermediate fits 64 bits.

    Intermediates count embeddings of prefixes of u, so they are bounded by
    C(n, j) for j <= m, whose maximum is C(n, min(m, n//2)).
    """
    if n <= 67:  # C(67, 33) < 2**64
        return True
    limit = min(m, n // 2)
    prod = 1
    for i in range(limit):
        prod = prod * (n - i) // (i + 1)
        if prod > _U64_MAX:
            return False
    return True


def count_scattered(w: Sequence[int], u: Sequence[int], q: int) -> int:
    m, n = len(u), len(w)
    if m > n:
        return 0
    if m == 0:
        return 1
    if _kernels is not None and q <= 256 and _fits_u64(n, m):
        return _kernels.count_scattered_u64(bytes(w), bytes(u))
    return _pure.count_scattered(w, u)


def merge_pairwise(
    q: int, pair_words: Sequence[Sequence[int]], counts: Sequence[int]
) -> list[int] | None:
    if _kernels is not None and q <= 256:
        blob = b"".join(bytes(word) for word in pair_words)
        offsets = array("q", [0] * (len(pair_words) + 1))
        for i, word in enumerate(pair_words):
            offsets[i + 1] = offsets[i] + len(word)
        merged = _kernels.merge_pairwise(q, blob, offsets, array("q", counts))
        return None if merged is None else list(merged)
    return _pure.merge_pairwise(q, pair_words, counts)
