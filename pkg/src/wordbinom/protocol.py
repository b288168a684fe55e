"""The adaptive query game over a binary alphabet.

An oracle hides a word of a publicly known length and answers subsequence
counts.  The strategy first asks for the second letter's count, orients
itself toward the rarer letter, then asks block patterns x, xy, x^2 y, ...
of increasing depth, attempting a full reconstruction after every answer.
The transcript never exceeds min(count_a, count_b) + 1 queries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from .binary import (
    BlockSystem,
    Inconsistent,
    NotYetUnique,
    Reconstructed,
    max_block_value,
    reconstruct_binary,
)
from .words import BINARY, Alphabet, Word, scattered_factor_count


@runtime_checkable
class OracleProtocol(Protocol):
    """Anything that can play the answering side of the game."""

    n: int
    alphabet: Alphabet

    def answer(self, query: Word) -> int: ...


class WordOracle:
    """Oracle backed by an in-memory hidden word; answers are always truthful."""

    def __init__(self, hidden: Word):
        self.hidden = hidden
        self.n = len(hidden)
        self.alphabet = hidden.alphabet
        self.calls = 0

    def answer(self, query: Word) -> int:
        self.calls += 1
        return scattered_factor_count(self.hidden, query)


class TranscriptOracle:
    """Replays recorded answers; unknown queries mean the transcript diverged."""

    def __init__(self, transcript: "QueryTranscript"):
        self.n = transcript.n
        self.alphabet = transcript.alphabet
        self._answers = {query.letters: value for query, value in transcript.queries}

    def answer(self, query: Word) -> int:
        try:
            return self._answers[query.letters]
        except KeyError:
            raise ValueError(
                f"transcript has no answer for query {query}"
            ) from None


@dataclass(frozen=True)
class QueryTranscript:
    """Ordered record of the game: every (query, answer) pair plus the outcome."""

    n: int
    alphabet: Alphabet
    queries: tuple[tuple[Word, int], ...]
    outcome: Word | None
    failure: str | None = None

    def __len__(self) -> int:
        return len(self.queries)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "alphabet": str(self.alphabet),
            "queries": [[str(q), str(v)] for q, v in self.queries],
            "outcome": None if self.outcome is None else str(self.outcome),
            **({"failure": self.failure} if self.failure else {}),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data) -> "QueryTranscript":
        alphabet = Alphabet.from_string(data["alphabet"])
        queries = tuple(
            (Word.parse(q, alphabet), int(v)) for q, v in data["queries"]
        )
        outcome = data.get("outcome")
        return cls(
            n=int(data["n"]),
            alphabet=alphabet,
            queries=queries,
            outcome=None if outcome is None else Word.parse(outcome, alphabet),
            failure=data.get("failure"),
        )

    @classmethod
    def from_json(cls, text: str) -> "QueryTranscript":
        return cls.from_json_dict(json.loads(text))


def adaptive_reconstruct(oracle: OracleProtocol) -> QueryTranscript:
    """Play the game to completion against the given oracle.

    Inconsistent answers (a lying oracle, or a stale transcript) yield a
    transcript with ``outcome=None`` and a failure diagnosis instead of an
    exception.
    """
    n, alphabet = oracle.n, oracle.alphabet
    if len(alphabet) != 2:
        raise ValueError("the adaptive game is played over a binary alphabet")
    queries: list[tuple[Word, int]] = []

    def failed(reason: str) -> QueryTranscript:
        return QueryTranscript(n, alphabet, tuple(queries), None, reason)

    if n == 0:
        return QueryTranscript(n, alphabet, (), Word((), alphabet))

    first = Word((1,), alphabet)
    high = oracle.answer(first)
    queries.append((first, high))
    if not 0 <= high <= n:
        return failed(f"count {high} for {first} is outside [0, {n}]")
    low = n - high
    # Orient toward the rarer letter; ties keep the alphabet order.
    if low <= high:
        block_letter, bound_letter, block_count = 0, 1, low
    else:
        block_letter, bound_letter, block_count = 1, 0, high

    system = BlockSystem.from_pairs(n, block_count, {0: n - block_count})
    while True:
        result = reconstruct_binary(system, alphabet, block_letter, bound_letter)
        if isinstance(result, Reconstructed):
            return QueryTranscript(n, alphabet, tuple(queries), result.word)
        if isinstance(result, Inconsistent):
            return failed(result.reason)
        assert isinstance(result, NotYetUnique)
        level = len(system.known)  # known levels are contiguous from 0
        if level > block_count:
            return failed("all levels answered without a unique solution")
        query = Word((block_letter,) * level + (bound_letter,), alphabet)
        value = oracle.answer(query)
        queries.append((query, value))
        if not 0 <= value <= max_block_value(n, block_count, level):
            return failed(f"count {value} for {query} is out of range")
        system = system.with_value(level, value)


def nonadaptive_set(n: int, block_count: int, alphabet: Alphabet | None = None) -> tuple[Word, ...]:
    """The fixed query set sufficient for every word with these letter counts.

    Levels 0..min(count_a, count_b) in the orientation of the rarer letter;
    its size is min(count_a, count_b) + 1.
    """
    if alphabet is None:
        alphabet = BINARY
    if not 0 <= block_count <= n:
        raise ValueError("need 0 <= block_count <= n")
    if block_count <= n - block_count:
        block_letter, bound_letter, depth = 0, 1, block_count
    else:
        block_letter, bound_letter, depth = 1, 0, n - block_count
    return tuple(
        Word((block_letter,) * level + (bound_letter,), alphabet)
        for level in range(depth + 1)
    )


def replay(transcript: QueryTranscript, candidate: Word) -> bool:
    """True iff the candidate word matches every recorded (query, answer) pair."""
    if len(candidate) != transcript.n:
        return False
    return all(
        scattered_factor_count(candidate, query) == value
        for query, value in transcript.queries
    )
