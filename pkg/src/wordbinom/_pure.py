"""Pure-Python kernels: the fallback used when the compiled core is absent.

Both functions mirror the signatures in ``_kernels`` closely enough for
``_backend`` to dispatch between them; they are also the reference
implementations the compiled versions are tested against.
"""

from __future__ import annotations

from typing import Sequence


def count_scattered(w: Sequence[int], u: Sequence[int]) -> int:
    """Number of ways u embeds into w as a subsequence (exact big integer).

    Standard prefix dynamic program, rolled into one row: after consuming a
    prefix of w, ``table[j]`` is the number of embeddings of ``u[:j]``.
    """
    m = len(u)
    if m > len(w):
        return 0
    table = [0] * (m + 1)
    table[0] = 1
    for c in w:
        for j in range(m, 0, -1):
            if u[j - 1] == c:
                table[j] += table[j - 1]
    return table[m]


def merge_pairwise(
    q: int, pair_words: Sequence[Sequence[int]], counts: Sequence[int]
) -> list[int] | None:
    """Interleave all two-letter projections back into one word.

    ``pair_words`` holds one projection per unordered letter pair, listed in
    canonical order (0,1), (0,2), ..., (0,q-1), (1,2), ...; letters are
    alphabet indices.  ``counts`` is the target number of occurrences per
    letter.  Returns the merged word, or None when no word has exactly these
    projections.

    A letter can be emitted only while it is at the front of every unconsumed
    projection it belongs to; with all pairs present at most one letter is
    emittable at a time, so a single pass with per-letter blocked counters
    realises the unique merge in O(n*q) operations.
    """
    npairs = q * (q - 1) // 2
    if len(pair_words) != npairs:
        raise ValueError(f"expected {npairs} pair words, got {len(pair_words)}")
    base = [a * (q - 1) - a * (a - 1) // 2 for a in range(q)]
    ptr = [0] * npairs
    ends = [len(word) for word in pair_words]
    rem = list(counts)
    blocked = [0] * q
    for a in range(q):
        for b in range(a + 1, q):
            p = base[a] + b - a - 1
            if ends[p] == 0:
                blocked[a] += 1
                blocked[b] += 1
            elif pair_words[p][0] == a:
                blocked[b] += 1
            else:
                blocked[a] += 1
    total = sum(rem)
    out: list[int] = []
    stack = [c for c in range(q) if rem[c] > 0 and blocked[c] == 0]
    while stack:
        c = stack.pop()
        if rem[c] == 0 or blocked[c] != 0:
            continue
        out.append(c)
        rem[c] -= 1
        for x in range(q):
            if x == c:
                continue
            p = base[c] + x - c - 1 if c < x else base[x] + c - x - 1
            word = pair_words[p]
            i = ptr[p] + 1
            ptr[p] = i
            if i == ends[p]:
                blocked[c] += 1
            elif word[i] == x:
                blocked[c] += 1
                blocked[x] -= 1
                if blocked[x] == 0 and rem[x] > 0:
                    stack.append(x)
        if rem[c] > 0 and blocked[c] == 0:
            stack.append(c)
    if len(out) != total:
        return None
    if any(ptr[p] != ends[p] for p in range(npairs)):
        return None
    return out
