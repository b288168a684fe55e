"""Word polynomials, shuffle and infiltration products, and Lyndon reduction.

The reduction rewrites any subsequence count as a polynomial in counts of
Lyndon words only: for a non-Lyndon u split as u = xy with every word of the
shuffle x and y at most u lexicographically,

    count(w, u) = ( count(w, x)*count(w, y)
                    - sum over v != u of infil(x, y)[v] * count(w, v)
                  ) / shuffle(x, y)[u]

and the recursion bottoms out at Lyndon words.  Expressions keep exact
rational constants because of the leading division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Callable, Iterator, Mapping

from .errors import InternalConsistencyError
from .words import Alphabet, Word, _require_same_alphabet, scattered_factor_count


class WordPolynomial:
    """Formal sum of words with non-negative integer coefficients."""

    __slots__ = ("_coeffs", "_alphabet")

    def __init__(self, alphabet: Alphabet, coeffs: Mapping[Word, int]):
        cleaned: dict[Word, int] = {}
        for word, c in coeffs.items():
            if word.alphabet != alphabet:
                raise ValueError("all polynomial keys must share one alphabet")
            if c < 0:
                raise ValueError("word polynomial coefficients are non-negative")
            if c:
                cleaned[word] = c
        self._coeffs = cleaned
        self._alphabet = alphabet

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    def coefficient(self, word: Word) -> int:
        return self._coeffs.get(word, 0)

    def items(self) -> list[tuple[Word, int]]:
        """Terms in lexicographic key order (deterministic printing)."""
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].letters)

    def support(self) -> list[Word]:
        return [word for word, _ in self.items()]

    def total_mass(self) -> int:
        return sum(self._coeffs.values())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordPolynomial):
            return NotImplemented
        return self._alphabet == other._alphabet and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._alphabet, frozenset(self._coeffs.items())))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c}*{_word_str(w)}" for w, c in self.items())

    def __repr__(self) -> str:
        return f"WordPolynomial({self})"


def _word_str(w: Word) -> str:
    return str(w) if len(w) else "ε"


@cache
def _shuffle_letters(x: tuple[int, ...], y: tuple[int, ...]) -> Mapping[tuple[int, ...], int]:
    if not x:
        return {y: 1}
    if not y:
        return {x: 1}
    out: dict[tuple[int, ...], int] = {}
    for rest, c in _shuffle_letters(x[1:], y).items():
        key = (x[0],) + rest
        out[key] = out.get(key, 0) + c
    for rest, c in _shuffle_letters(x, y[1:]).items():
        key = (y[0],) + rest
        out[key] = out.get(key, 0) + c
    return out


@cache
def _infiltrate_letters(x: tuple[int, ...], y: tuple[int, ...]) -> Mapping[tuple[int, ...], int]:
    if not x:
        return {y: 1}
    if not y:
        return {x: 1}
    out: dict[tuple[int, ...], int] = {}
    for rest, c in _infiltrate_letters(x[1:], y).items():
        key = (x[0],) + rest
        out[key] = out.get(key, 0) + c
    for rest, c in _infiltrate_letters(x, y[1:]).items():
        key = (y[0],) + rest
        out[key] = out.get(key, 0) + c
    if x[0] == y[0]:  # the two front letters may land on the same position
        for rest, c in _infiltrate_letters(x[1:], y[1:]).items():
            key = (x[0],) + rest
            out[key] = out.get(key, 0) + c
    return out


def shuffle(u1: Word, u2: Word) -> WordPolynomial:
    """All interleavings of u1 and u2, with multiplicity."""
    _require_same_alphabet(u1, u2)
    terms = _shuffle_letters(u1.letters, u2.letters)
    return WordPolynomial(
        u1.alphabet, {Word(t, u1.alphabet): c for t, c in terms.items()}
    )


def infiltrate(u1: Word, u2: Word) -> WordPolynomial:
    """Shuffle variant where equal letters may merge onto one position."""
    _require_same_alphabet(u1, u2)
    terms = _infiltrate_letters(u1.letters, u2.letters)
    return WordPolynomial(
        u1.alphabet, {Word(t, u1.alphabet): c for t, c in terms.items()}
    )


def is_lyndon(w: Word) -> bool:
    """True iff w is strictly smaller than every proper rotation of itself."""
    if len(w) == 0:
        raise ValueError("the empty word has no Lyndon status")
    lt = w.letters
    return all(lt < lt[i:] + lt[:i] for i in range(1, len(lt)))


def lyndon_words(alphabet: Alphabet, max_len: int) -> list[Word]:
    """All Lyndon words of length <= max_len, in lexicographic order (Duval)."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    q = len(alphabet)
    out: list[Word] = []
    current = [0]
    while current:
        out.append(Word(tuple(current), alphabet))
        current = (current * (max_len // len(current) + 1))[:max_len]
        while current and current[-1] == q - 1:
            current.pop()
        if current:
            current[-1] += 1
    return out


def lyndon_split(u: Word) -> tuple[Word, Word]:
    """Split a non-Lyndon u = xy whose shuffle stays lexicographically <= u.

    Scans cut positions shortest-x-first and verifies the condition by
    computing the shuffle outright; a cut always exists, so exhausting the
    scan signals a bug.
    """
    if len(u) < 2:
        raise ValueError("need at least two letters to split")
    if is_lyndon(u):
        raise ValueError("word is Lyndon; nothing to split")
    for cut in range(1, len(u)):
        x, y = u[:cut], u[cut:]
        biggest = max(_shuffle_letters(x.letters, y.letters))
        if biggest <= u.letters:
            return x, y
    raise InternalConsistencyError(f"no valid split for {u}")


# ---------------------------------------------------------------------------
# Reduction expressions


class ReductionExpr:
    """Node of a reduction expression over Lyndon-word count leaves."""

    __slots__ = ()

    def evaluate(self, leaf_value: Callable[[Word], int]) -> Fraction:
        raise NotImplementedError

    def expand(self) -> dict[tuple[tuple[int, ...], ...], Fraction]:
        """Canonical polynomial form: monomial (sorted leaf tuple) -> coefficient."""
        raise NotImplementedError

    def leaves(self) -> Iterator[Word]:
        raise NotImplementedError


@dataclass(frozen=True)
class LyndonCoefficient(ReductionExpr):
    word: Word

    def evaluate(self, leaf_value):
        return Fraction(leaf_value(self.word))

    def expand(self):
        return {(self.word.letters,): Fraction(1)}

    def leaves(self):
        yield self.word

    def __str__(self):
        return f"binom({self.word})"


@dataclass(frozen=True)
class Constant(ReductionExpr):
    value: Fraction

    def evaluate(self, leaf_value):
        return self.value

    def expand(self):
        return {(): self.value}

    def leaves(self):
        return iter(())

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Sum(ReductionExpr):
    terms: tuple[ReductionExpr, ...]

    def evaluate(self, leaf_value):
        return sum((t.evaluate(leaf_value) for t in self.terms), Fraction(0))

    def expand(self):
        out: dict[tuple[tuple[int, ...], ...], Fraction] = {}
        for t in self.terms:
            for mono, c in t.expand().items():
                out[mono] = out.get(mono, Fraction(0)) + c
        return {m: c for m, c in out.items() if c}

    def leaves(self):
        for t in self.terms:
            yield from t.leaves()

    def __str__(self):
        parts = []
        for t in self.terms:
            rendered, negated = _render_signed(t)
            if not parts:
                parts.append(f"-{rendered}" if negated else rendered)
            else:
                parts.append(f"- {rendered}" if negated else f"+ {rendered}")
        return " ".join(parts)


@dataclass(frozen=True)
class Product(ReductionExpr):
    factors: tuple[ReductionExpr, ...]

    def evaluate(self, leaf_value):
        value = Fraction(1)
        for f in self.factors:
            value *= f.evaluate(leaf_value)
        return value

    def expand(self):
        out = {(): Fraction(1)}
        for f in self.factors:
            nxt: dict[tuple[tuple[int, ...], ...], Fraction] = {}
            for m1, c1 in out.items():
                for m2, c2 in f.expand().items():
                    mono = tuple(sorted(m1 + m2))
                    c = c1 * c2
                    nxt[mono] = nxt.get(mono, Fraction(0)) + c
            out = nxt
        return {m: c for m, c in out.items() if c}

    def leaves(self):
        for f in self.factors:
            yield from f.leaves()

    def __str__(self):
        return " * ".join(_parenthesize(f) for f in self.factors)


def _parenthesize(expr: ReductionExpr) -> str:
    text = str(expr)
    if isinstance(expr, Sum) or (isinstance(expr, Constant) and expr.value < 0):
        return f"({text})"
    return text


def _render_signed(expr: ReductionExpr) -> tuple[str, bool]:
    """Render a Sum term, pulling a leading negative constant out as a sign."""
    if isinstance(expr, Constant) and expr.value < 0:
        return str(-expr.value), True
    if isinstance(expr, Product) and expr.factors:
        head = expr.factors[0]
        if isinstance(head, Constant) and head.value < 0:
            rest = (Constant(-head.value),) + expr.factors[1:]
            if rest[0] == Constant(Fraction(1)) and len(rest) > 1:
                rest = rest[1:]
            if len(rest) == 1:
                return _parenthesize(rest[0]), True
            return str(Product(rest)), True
    return _parenthesize(expr) if isinstance(expr, Sum) else str(expr), False


def reduce_to_lyndon(u: Word) -> ReductionExpr:
    """Expression computing count(w, u) from Lyndon-word counts only.

    Every leaf is a Lyndon word, lexicographically <= u and no longer than u;
    evaluating with the true counts of any w reproduces count(w, u).
    """
    if len(u) == 0:
        raise ValueError("cannot reduce the empty word")
    alphabet = u.alphabet
    memo: dict[tuple[int, ...], ReductionExpr] = {}

    def build(letters: tuple[int, ...]) -> ReductionExpr:
        if letters in memo:
            return memo[letters]
        word = Word(letters, alphabet)
        if is_lyndon(word):
            expr: ReductionExpr = LyndonCoefficient(word)
        else:
            x, y = lyndon_split(word)
            divisor = _shuffle_letters(x.letters, y.letters)[letters]
            terms: list[ReductionExpr] = [Product((build(x.letters), build(y.letters)))]
            for v_letters, c in sorted(_infiltrate_letters(x.letters, y.letters).items()):
                if v_letters == letters:
                    continue
                terms.append(Product((Constant(Fraction(-c)), build(v_letters))))
            expr = Sum(tuple(terms))
            if divisor != 1:
                expr = Product((Constant(Fraction(1, divisor)), expr))
        memo[letters] = expr
        return expr

    return build(u.letters)


def eval_reduction(expr: ReductionExpr, w: Word) -> int:
    """Evaluate a reduction at w; the exact rational result must be a count."""
    value = expr.evaluate(lambda v: scattered_factor_count(w, v))
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(
            f"reduction evaluated to {value}, expected a non-negative integer"
        )
    return int(value)
