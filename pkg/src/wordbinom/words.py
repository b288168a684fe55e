"""Ordered alphabets, words over them, and subsequence-occurrence counts.

A word's "binomial coefficient" with respect to a pattern u is the number of
ways u occurs in it as a subsequence of not necessarily adjacent letters.
These counts grow like C(n, n/2), so they are plain Python integers (exact,
arbitrary precision) throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from ._backend import count_scattered
from .errors import AlphabetMismatchError, EnumerationCapExceeded

#: Largest number of candidate words the brute-force oracle will enumerate.
DEFAULT_ENUMERATION_CAP = 1 << 24


@dataclass(frozen=True)
class Alphabet:
    """A totally ordered alphabet of distinct single-character symbols.

    The position of a symbol in ``symbols`` is its letter index; every
    lexicographic comparison in the package is taken with respect to this
    order.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(self.symbols) < 1:
            raise ValueError("alphabet needs at least one symbol")
        if any(not isinstance(s, str) or len(s) != 1 for s in self.symbols):
            raise ValueError("alphabet symbols must be single characters")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be pairwise distinct")

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in alphabet {self}") from None

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join(self.symbols)


BINARY = Alphabet.from_string("ab")


@dataclass(frozen=True)
class Word:
    """An immutable word: a tuple of letter indices plus its alphabet."""

    letters: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        q = len(self.alphabet)
        if any(not 0 <= c < q for c in self.letters):
            raise ValueError("letter index out of alphabet range")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "Word":
        return cls(tuple(alphabet.index(ch) for ch in text), alphabet)

    def __str__(self) -> str:
        return "".join(self.alphabet.symbols[c] for c in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.alphabet)
        return self.letters[item]

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def count(self, letter: int) -> int:
        return self.letters.count(letter)

    def concat(self, other: "Word") -> "Word":
        _require_same_alphabet(self, other)
        return Word(self.letters + other.letters, self.alphabet)

    # Lexicographic order: tuple comparison gives prefix-first semantics,
    # which matches word order induced by the alphabet order ("a" < "ab" < "b").
    def __lt__(self, other: "Word") -> bool:
        _require_same_alphabet(self, other)
        return self.letters < other.letters

    def __le__(self, other: "Word") -> bool:
        _require_same_alphabet(self, other)
        return self.letters <= other.letters

    def __gt__(self, other: "Word") -> bool:
        return not self <= other

    def __ge__(self, other: "Word") -> bool:
        return not self < other


def _require_same_alphabet(w: Word, u: Word) -> None:
    if w.alphabet != u.alphabet:
        raise AlphabetMismatchError(
            f"words use different alphabets: {w.alphabet} vs {u.alphabet}"
        )


def scattered_factor_count(w: Word, u: Word) -> int:
    """Number of occurrences of u in w as a subsequence (exact integer)."""
    _require_same_alphabet(w, u)
    return count_scattered(w.letters, u.letters, len(w.alphabet))


def parikh(w: Word) -> tuple[int, ...]:
    """Occurrence count of every alphabet letter, in alphabet order."""
    counts = [0] * len(w.alphabet)
    for c in w.letters:
        counts[c] += 1
    return tuple(counts)


def words_of_length(alphabet: Alphabet, n: int) -> Iterator[Word]:
    """All words of length n over the alphabet, in lexicographic order."""
    for letters in itertools.product(range(len(alphabet)), repeat=n):
        yield Word(letters, alphabet)


def brute_distinguishing_witness(
    w: Word, factors: Iterable[Word], cap: int = DEFAULT_ENUMERATION_CAP
) -> Word | None:
    """First word of the same length that shares every count with w, else None.

    Ground-truth oracle: enumerates the full length-|w| language, so it is
    guarded by ``cap`` on the number of candidates.
    """
    factors = tuple(factors)
    for u in factors:
        _require_same_alphabet(w, u)
    q = len(w.alphabet)
    required = q ** len(w)
    if required > cap:
        raise EnumerationCapExceeded(required, cap)
    targets = [scattered_factor_count(w, u) for u in factors]
    for v in words_of_length(w.alphabet, len(w)):
        if v.letters == w.letters:
            continue
        if all(
            scattered_factor_count(v, u) == t for u, t in zip(factors, targets)
        ):
            return v
    return None


def is_uniquely_determined_brute(
    w: Word, factors: Iterable[Word], cap: int = DEFAULT_ENUMERATION_CAP
) -> bool:
    """True iff no other word of the same length matches all the counts."""
    return brute_distinguishing_witness(w, factors, cap) is None
