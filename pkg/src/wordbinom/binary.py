"""Binary-word reconstruction from block-coefficient counts.

A binary word with ``k`` occurrences of the repeated letter x and gaps
``s_1..s_{k+1}`` of the terminal letter y looks like

    y^{s_1} x y^{s_2} x ... x y^{s_{k+1}},

and the count of the pattern x^level y in it is a linear form

    sum over i > level of C(i-1, level) * s_i

with strictly increasing coefficients (for level >= 1).  Supplying the
counts for levels 0..j therefore yields a triangular Diophantine system;
once some level's equation has a unique solution, back-substitution pins the
whole word.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import comb
from typing import Mapping, Union

from .words import BINARY, Alphabet, Word

#: Enumeration guard when an exact solution count is requested.
SOLUTION_COUNT_CAP = 10**6


@dataclass(frozen=True)
class BlockDecomposition:
    """Gap profile of a binary word: run lengths of the terminal letter."""

    gaps: tuple[int, ...]  # s_1 .. s_{block_count+1}
    n: int
    block_count: int

    def __post_init__(self):
        if self.block_count < 0 or self.n < self.block_count:
            raise ValueError("need 0 <= block_count <= n")
        if len(self.gaps) != self.block_count + 1:
            raise ValueError("expected one gap per block boundary")
        if any(s < 0 for s in self.gaps):
            raise ValueError("gaps are non-negative")
        if sum(self.gaps) != self.n - self.block_count:
            raise ValueError("gaps must sum to the terminal-letter count")

    @classmethod
    def from_word(cls, w: Word, block_letter: int = 0, bound_letter: int = 1) -> "BlockDecomposition":
        if set(w.letters) - {block_letter, bound_letter}:
            raise ValueError("word uses letters outside the chosen pair")
        gaps = [0]
        for c in w.letters:
            if c == block_letter:
                gaps.append(0)
            else:
                gaps[-1] += 1
        return cls(tuple(gaps), len(w), len(gaps) - 1)

    def word(self, alphabet: Alphabet = BINARY, block_letter: int = 0, bound_letter: int = 1) -> Word:
        letters: list[int] = []
        for i, gap in enumerate(self.gaps):
            letters.extend([bound_letter] * gap)
            if i < self.block_count:
                letters.append(block_letter)
        return Word(tuple(letters), alphabet)


def block_coefficient(dec: BlockDecomposition, level: int) -> int:
    """Count of the pattern x^level y in the decomposed word."""
    if not 0 <= level <= dec.block_count:
        raise ValueError(f"level must be in [0, {dec.block_count}]")
    return sum(
        comb(i - 1, level) * dec.gaps[i - 1]
        for i in range(level + 1, dec.block_count + 2)
    )


def max_block_value(n: int, block_count: int, level: int) -> int:
    """Largest achievable level coefficient: C(block_count, level)*(n - block_count)."""
    if not 0 <= level <= block_count <= n:
        raise ValueError("need 0 <= level <= block_count <= n")
    return comb(block_count, level) * (n - block_count)


def _solutions(n: int, block_count: int, level: int, value: int, cap: int | None):
    """Tail solutions (r_{level+1}..r_{block_count+1}) of the level equation.

    Solutions satisfy both the linear equation and the budget
    ``sum r_i <= n - block_count`` (only that many terminal letters exist).
    Enumerates from the highest-index variable downward with pruning; stops
    after ``cap`` solutions when a cap is given.
    """
    budget = n - block_count
    coeffs = [comb(i - 1, level) for i in range(level + 1, block_count + 2)]
    found: list[tuple[int, ...]] = []
    tail: list[int] = []

    def dfs(idx: int, value_left: int, budget_left: int) -> None:
        if cap is not None and len(found) >= cap:
            return
        if idx == 0:  # lowest variable has coefficient 1
            if value_left <= budget_left:
                found.append((value_left, *reversed(tail)))
            return
        c = coeffs[idx]
        prev = coeffs[idx - 1]
        for r in range(min(value_left // c, budget_left), -1, -1):
            rest = value_left - c * r
            if rest > prev * (budget_left - r):
                break  # rest only grows as r shrinks; bound grows slower
            tail.append(r)
            dfs(idx - 1, rest, budget_left - r)
            tail.pop()
            if cap is not None and len(found) >= cap:
                return

    if 0 <= value <= coeffs[-1] * budget:
        dfs(len(coeffs) - 1, value, budget)
    return found


def solution_set(n: int, block_count: int, level: int, value: int) -> list[tuple[int, ...]]:
    """All tail solutions for the level equation, lexicographically ordered."""
    if not 0 <= level <= block_count <= n:
        raise ValueError("need 0 <= level <= block_count <= n")
    return sorted(_solutions(n, block_count, level, value, cap=None))


def count_solutions(
    n: int, block_count: int, level: int, value: int, cap: int = SOLUTION_COUNT_CAP
) -> tuple[int, bool]:
    """Number of tail solutions, truncated at ``cap``; returns (count, truncated)."""
    found = _solutions(n, block_count, level, value, cap=cap)
    return len(found), len(found) >= cap


class Uniqueness(enum.Enum):
    UNIQUE = "unique"
    NOT_UNIQUE = "not-unique"
    UNKNOWN = "unknown"


def _fast_category(n: int, block_count: int, level: int, value: int) -> int | None:
    """Solution count category (0, 1, or 2 meaning "at least 2") or None.

    Only cases backed by the strictly increasing coefficients (level >= 1) or
    by direct forcing are classified; level 0 has all-ones coefficients, so
    there the count is a composition count and the max-value rule does not
    apply.
    """
    budget = n - block_count
    top = comb(block_count, level) * budget
    if value < 0 or value > top:
        return 0
    if level == block_count:
        return 1  # single variable with coefficient 1
    if level == 0:
        # compositions of value into block_count+1 >= 2 parts
        return 1 if value == 0 else 2
    if value <= level:
        # below the second coefficient: forces r_{level+1} = value, zeros above
        return 1 if value <= budget else 0
    if value == top:
        return 1
    step = comb(block_count, level) - comb(block_count - 1, level)
    if value == top - step:
        # one terminal letter moved from the last gap to the one before it
        return 1
    return None


def is_unique_fast(n: int, block_count: int, level: int, value: int) -> Uniqueness:
    """Constant-time sufficient checks for solution-set uniqueness.

    UNKNOWN means the caller must fall back to enumeration; the classified
    cases never contradict the enumerated solution count.
    """
    if not 0 <= level <= block_count <= n:
        raise ValueError("need 0 <= level <= block_count <= n")
    category = _fast_category(n, block_count, level, value)
    if category is None:
        return Uniqueness.UNKNOWN
    return Uniqueness.UNIQUE if category == 1 else Uniqueness.NOT_UNIQUE


def characterize_pair_uniqueness(n: int, block_count: int, pair_value: int) -> bool:
    """Whether (letter count, level-1 count) alone pin a length-n binary word."""
    if not 0 <= block_count <= n:
        raise ValueError("need 0 <= block_count <= n")
    top = block_count * (n - block_count)
    if not 0 <= pair_value <= top:
        raise ValueError(f"pair count must lie in [0, {top}]")
    if block_count in (0, n):
        return True
    if block_count in (1, n - 1):
        return True
    return pair_value in (0, 1, top - 1, top)


@dataclass(frozen=True)
class BlockSystem:
    """Accumulated level counts for one (n, block_count) reconstruction."""

    n: int
    block_count: int
    known: tuple[tuple[int, int], ...]  # sorted (level, value) pairs

    def __post_init__(self):
        if not 0 <= self.block_count <= self.n:
            raise ValueError("need 0 <= block_count <= n")
        seen = set()
        for level, value in self.known:
            if not 0 <= level <= self.block_count:
                raise ValueError(f"level {level} outside [0, {self.block_count}]")
            if level in seen:
                raise ValueError(f"duplicate level {level}")
            seen.add(level)
            top = max_block_value(self.n, self.block_count, level)
            if not 0 <= value <= top:
                raise ValueError(
                    f"value {value} for level {level} outside [0, {top}]"
                )
        if tuple(sorted(self.known)) != self.known:
            raise ValueError("known pairs must be sorted by level")

    @classmethod
    def from_pairs(cls, n: int, block_count: int, pairs: Mapping[int, int]) -> "BlockSystem":
        return cls(n, block_count, tuple(sorted(pairs.items())))

    def values(self) -> dict[int, int]:
        return dict(self.known)

    def with_value(self, level: int, value: int) -> "BlockSystem":
        pairs = self.values()
        pairs[level] = value
        return BlockSystem.from_pairs(self.n, self.block_count, pairs)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k_a": self.block_count,
            "pairs": [[level, value] for level, value in self.known],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "BlockSystem":
        pairs = {int(level): int(value) for level, value in data["pairs"]}
        return cls.from_pairs(int(data["n"]), int(data["k_a"]), pairs)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BlockSystem":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class Reconstructed:
    word: Word
    decomposition: BlockDecomposition
    unique_level: int
    levels_used: tuple[int, ...]


@dataclass(frozen=True)
class NotYetUnique:
    deepest_level: int
    solutions: int
    truncated: bool = False


@dataclass(frozen=True)
class Inconsistent:
    reason: str


ReconstructionResult = Union[Reconstructed, NotYetUnique, Inconsistent]


def _level_is_unique(n: int, block_count: int, level: int, value: int) -> tuple[bool, int]:
    """(unique?, solution count capped at 2) for one level equation."""
    category = _fast_category(n, block_count, level, value)
    if category is None:
        category = len(_solutions(n, block_count, level, value, cap=2))
    return category == 1, category


def reconstruct_binary(
    system: BlockSystem,
    alphabet: Alphabet = BINARY,
    block_letter: int = 0,
    bound_letter: int = 1,
) -> ReconstructionResult:
    """Solve the accumulated level equations for the unique word, if any.

    The known levels (level 0 is implied by n and block_count and derived
    when absent) must form a contiguous prefix 0..j.  Scans for the smallest
    level whose equation has exactly one solution, back-substitutes downward,
    then verifies every supplied count against the result.
    """
    n, bc = system.n, system.block_count
    budget = n - bc
    known = system.values()
    if known.get(0, budget) != budget:
        return Inconsistent(
            f"level-0 count {known[0]} contradicts the letter counts (expected {budget})"
        )
    known[0] = budget
    levels = sorted(known)
    if levels != list(range(len(levels))):
        raise ValueError("known levels must form a contiguous prefix 0..j")

    # Degenerate constant words need no equations.
    if bc == 0 or budget == 0:
        dec = BlockDecomposition((budget,) + (0,) * bc, n, bc)
        for level, value in known.items():
            if block_coefficient(dec, level) != value:
                return Inconsistent(f"level-{level} count impossible for a constant word")
        return Reconstructed(
            dec.word(alphabet, block_letter, bound_letter), dec, 0, (0,)
        )

    unique_level = None
    for level in levels:
        unique, seen = _level_is_unique(n, bc, level, known[level])
        if seen == 0:
            return Inconsistent(f"level-{level} count {known[level]} has no solution")
        if unique:
            unique_level = level
            break
    if unique_level is None:
        deepest = levels[-1]
        count, truncated = count_solutions(n, bc, deepest, known[deepest])
        return NotYetUnique(deepest, count, truncated)

    tail = _solutions(n, bc, unique_level, known[unique_level], cap=2)[0]
    gaps = [0] * (bc + 1)
    for offset, r in enumerate(tail):
        gaps[unique_level + offset] = r  # gaps[i] holds s_{i+1}
    for level in range(unique_level - 1, -1, -1):
        rest = sum(
            comb(i - 1, level) * gaps[i - 1] for i in range(level + 2, bc + 2)
        )
        s = known[level] - rest
        if s < 0:
            return Inconsistent(f"level-{level} count forces a negative gap")
        gaps[level] = s

    if sum(gaps) != budget:
        return Inconsistent("gap lengths do not exhaust the terminal letters")
    dec = BlockDecomposition(tuple(gaps), n, bc)
    for level, value in known.items():
        if block_coefficient(dec, level) != value:
            return Inconsistent(f"level-{level} count contradicts the solution")
    return Reconstructed(
        dec.word(alphabet, block_letter, bound_letter),
        dec,
        unique_level,
        tuple(range(unique_level + 1)),
    )


def minimal_unique_level(w: Word, block_letter: int = 0, bound_letter: int = 1) -> int:
    """Smallest level whose equation already has a unique solution for w."""
    dec = BlockDecomposition.from_word(w, block_letter, bound_letter)
    for level in range(dec.block_count + 1):
        unique, _ = _level_is_unique(
            dec.n, dec.block_count, level, block_coefficient(dec, level)
        )
        if unique:
            return level
    raise AssertionError("the top level is always unique")  # pragma: no cover
