"""Independent oracles shared across test modules.

These deliberately avoid the library's own algorithms: counting enumerates
index subsets outright, membership is a greedy scan.  Slow and obviously
correct, which is the point.
"""

from __future__ import annotations

import itertools

from wordbinom import Alphabet, Word


def naive_count(w: Word, u: Word) -> int:
    """Embedding count by brute enumeration of index subsets."""
    positions = range(len(w))
    return sum(
        1
        for combo in itertools.combinations(positions, len(u))
        if all(w[i] == u[j] for j, i in enumerate(combo))
    )


def is_subsequence(u: Word, w: Word) -> bool:
    """Greedy left-to-right containment check."""
    it = iter(w.letters)
    return all(letter in it for letter in u.letters)


def all_words(alphabet: Alphabet, max_len: int, min_len: int = 0) -> list[Word]:
    out = []
    for n in range(min_len, max_len + 1):
        for letters in itertools.product(range(len(alphabet)), repeat=n):
            out.append(Word(letters, alphabet))
    return out
