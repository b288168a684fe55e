"""Exact evaluation of the reconstruction query-count bounds.

The classical route needs every Lyndon-word count up to the spectrum
threshold floor(16*sqrt(n)/7) + 5; the block-query route needs
min(count_a, count_b) + 1 counts for binary words and
sum over letters of count * (q + 1 - rank) in general.  All comparisons here
are exact: big integers, rationals, and values a + b*sqrt(s) in a quadratic
extension, because the margins are small near the crossover lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .words import Word, parikh


def mobius(d: int) -> int:
    """Moebius function via trial-division factorisation."""
    if d < 1:
        raise ValueError("mobius is defined on positive integers")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if d > 1:
        result = -result
    return result


def lyndon_count(q: int, length: int) -> int:
    """Number of Lyndon words of exactly this length over q letters."""
    if q < 1 or length < 1:
        raise ValueError("need q >= 1 and length >= 1")
    total = sum(
        mobius(d) * q ** (length // d) for d in range(1, length + 1) if length % d == 0
    )
    return total // length


def kr_threshold(n: int) -> int:
    """floor(16*sqrt(n)/7) + 5, computed without floating point.

    floor(16*sqrt(n)) = isqrt(256*n), and dividing a floor by 7 floors the
    quotient, so the whole expression stays bit-exact at perfect squares.
    """
    if n < 1:
        raise ValueError("length must be positive")
    return math.isqrt(256 * n) // 7 + 5


_BINARY_PREFIX: list[int] = [0]  # prefix sums of lyndon_count(2, i)


def binary_baseline(n: int) -> int:
    """Lyndon words up to the spectrum threshold: the classical query count."""
    threshold = kr_threshold(n)
    while len(_BINARY_PREFIX) <= threshold:
        i = len(_BINARY_PREFIX)
        _BINARY_PREFIX.append(_BINARY_PREFIX[-1] + lyndon_count(2, i))
    return _BINARY_PREFIX[threshold]


@dataclass(frozen=True)
class QuadraticValue:
    """Exact value rational + surd*sqrt(radicand), radicand squarefree-ish.

    A perfect-square radicand is folded into the rational part at
    construction, so q = 3 (radicand 4) degenerates to plain rationals.
    """

    rational: Fraction
    surd: Fraction
    radicand: int

    @classmethod
    def of(cls, rational, surd=0, radicand: int = 0) -> "QuadraticValue":
        rational = Fraction(rational)
        surd = Fraction(surd)
        if radicand < 0:
            raise ValueError("radicand must be non-negative")
        root = math.isqrt(radicand)
        if root * root == radicand:
            return cls(rational + surd * root, Fraction(0), 0)
        return cls(rational, surd, radicand if surd else 0)

    def _compatible(self, other: "QuadraticValue") -> int:
        if self.radicand and other.radicand and self.radicand != other.radicand:
            raise ValueError("cannot mix different radicands")
        return self.radicand or other.radicand

    def __add__(self, other) -> "QuadraticValue":
        other = _as_quadratic(other)
        radicand = self._compatible(other)
        return QuadraticValue.of(
            self.rational + other.rational, self.surd + other.surd, radicand
        )

    def __sub__(self, other) -> "QuadraticValue":
        other = _as_quadratic(other)
        radicand = self._compatible(other)
        return QuadraticValue.of(
            self.rational - other.rational, self.surd - other.surd, radicand
        )

    def __rsub__(self, other) -> "QuadraticValue":
        return _as_quadratic(other) - self

    def scale(self, factor) -> "QuadraticValue":
        factor = Fraction(factor)
        return QuadraticValue.of(self.rational * factor, self.surd * factor, self.radicand)

    def sign(self) -> int:
        a, b = self.rational, self.surd
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare |a| and |b|*sqrt(radicand) by squaring
        lhs, rhs = a * a, b * b * self.radicand
        if lhs == rhs:
            return 0
        bigger_rational = lhs > rhs
        return (1 if a > 0 else -1) if bigger_rational else (1 if b > 0 else -1)

    def __gt__(self, other) -> bool:
        return (self - _as_quadratic(other)).sign() > 0

    def __lt__(self, other) -> bool:
        return (self - _as_quadratic(other)).sign() < 0

    def __ge__(self, other) -> bool:
        return not self < other

    def __le__(self, other) -> bool:
        return not self > other

    def __floor__(self) -> int:
        estimate = float(self.rational) + float(self.surd) * math.sqrt(self.radicand or 0)
        m = math.floor(estimate) - 2
        while self >= m + 1:  # exact adjustment around the float estimate
            m += 1
        return m

    def __float__(self) -> float:
        return float(self.rational) + float(self.surd) * math.sqrt(self.radicand or 0)

    def __str__(self) -> str:
        if self.surd == 0:
            return str(self.rational)
        return f"{self.rational} + {self.surd}*sqrt({self.radicand})"


def _as_quadratic(value) -> QuadraticValue:
    if isinstance(value, QuadraticValue):
        return value
    return QuadraticValue.of(Fraction(value))


_GENERAL_PREFIX: dict[int, list[QuadraticValue]] = {}


def general_baseline(n: int, q: int) -> QuadraticValue:
    """Classical query-count estimate for alphabets of size q >= 3.

    Sum over i up to the spectrum threshold of ((q+1)^(i/2) - 1) / (i*q),
    evaluated exactly in the extension by sqrt(q+1): even i contribute
    rationals, odd i contribute multiples of the root.
    """
    if q < 3:
        raise ValueError("the general estimate assumes q >= 3")
    threshold = kr_threshold(n)
    s = q + 1
    prefix = _GENERAL_PREFIX.setdefault(q, [QuadraticValue.of(0)])
    while len(prefix) <= threshold:
        i = len(prefix)
        half, odd = divmod(i, 2)
        power = s**half
        if odd:
            term = QuadraticValue.of(Fraction(-1, i * q), Fraction(power, i * q), s)
        else:
            term = QuadraticValue.of(Fraction(power - 1, i * q))
        prefix.append(prefix[-1] + term)
    return prefix[threshold]


def our_binary_bound(w: Word) -> int:
    """Queries the adaptive block strategy needs: min letter count plus one."""
    if len(w.alphabet) != 2:
        raise ValueError("binary bound needs a two-letter alphabet")
    counts = parikh(w)
    return min(counts) + 1


def frequency_ascending_order(w: Word) -> tuple[int, ...]:
    """Letters ordered by ascending occurrence count (index breaks ties)."""
    counts = parikh(w)
    return tuple(sorted(range(len(counts)), key=lambda letter: (counts[letter], letter)))


def our_general_bound(w: Word, order: Sequence[int] | None = None) -> int:
    """Worst-case block-coefficient budget sum count_i * (q + 1 - rank_i).

    ``order`` ranks the letters (position 1 gets weight q); the default is
    the alphabet order.  Ranking letters by ascending frequency instead
    (``frequency_ascending_order``) minimises the value.
    """
    q = len(w.alphabet)
    counts = parikh(w)
    if order is None:
        order = tuple(range(q))
    if sorted(order) != list(range(q)):
        raise ValueError("order must be a permutation of the letters")
    return sum(counts[letter] * (q - i) for i, letter in enumerate(order))


def worst_case_general_bound(n: int, q: int) -> int:
    """Largest budget over all letter distributions: q*n (all mass on rank 1)."""
    return q * n


def count_small_coefficient_words(n: int, block_count: int, level: int, value: int) -> int:
    """Number of gap profiles whose level coefficient equals a small value.

    For value <= level the tail above the level is forced to zero, leaving
    the first ``level`` gaps free to share the remaining terminal letters;
    the count is the binomial convolution over how many of those gaps are
    non-zero.  Counts full profiles, so it is 0 when the remainder is
    negative and [remainder == 0] when level is 0.
    """
    if not 0 <= level <= block_count <= n:
        raise ValueError("need 0 <= level <= block_count <= n")
    if not 0 <= value <= level:
        raise ValueError("the closed form applies to values in [0, level]")
    remainder = n - block_count - value
    if remainder < 0:
        return 0
    if level == 0:
        return 1 if remainder == 0 else 0
    total = 1 if remainder == 0 else 0  # all-zero head
    total += sum(
        math.comb(level, parts) * math.comb(remainder - 1, parts - 1)
        for parts in range(1, level + 1)
        if remainder >= parts
    )
    return total


Number = Union[int, Fraction, QuadraticValue]


@dataclass(frozen=True)
class BoundReport:
    """One row of the bound comparison table."""

    n: int
    q: int
    kr_threshold: int
    baseline: Number
    ours_worst_case: int
    margin: Number


def binary_bound_report(n: int) -> BoundReport:
    baseline = binary_baseline(n)
    ours = n // 2 + 1
    return BoundReport(n, 2, kr_threshold(n), baseline, ours, baseline - ours)


def general_bound_report(n: int, q: int) -> BoundReport:
    baseline = general_baseline(n, q)
    ours = worst_case_general_bound(n, q)
    return BoundReport(n, q, kr_threshold(n), baseline, ours, baseline - ours)
