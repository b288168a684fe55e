"""Core word types and the subsequence-count oracle."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordbinom import (
    Alphabet,
    Word,
    is_uniquely_determined_brute,
    parikh,
    scattered_factor_count,
    words_of_length,
)
from wordbinom.errors import AlphabetMismatchError, EnumerationCapExceeded
from wordbinom.words import brute_distinguishing_witness

from helpers import all_words, naive_count


def W(text, alphabet):
    return Word.parse(text, alphabet)


class TestAlphabet:
    def test_order_is_positional(self):
        alphabet = Alphabet.from_string("ban")
        assert alphabet.index("b") == 0
        assert alphabet.index("n") == 2
        assert len(alphabet) == 3

    def test_rejects_duplicates_and_empties(self):
        with pytest.raises(ValueError):
            Alphabet.from_string("aa")
        with pytest.raises(ValueError):
            Alphabet.from_string("")
        with pytest.raises(ValueError):
            Alphabet(("ab",))

    def test_unknown_symbol(self, ab):
        with pytest.raises(ValueError):
            ab.index("z")


class TestWord:
    def test_parse_str_round_trip(self, abn):
        for text in ("", "banana", "nnn", "a"):
            assert str(W(text, abn)) == text

    @given(st.text(alphabet="abn", max_size=30))
    def test_round_trip_property(self, text):
        abn = Alphabet.from_string("abn")
        assert str(Word.parse(text, abn)) == text

    def test_rejects_out_of_range_letters(self, ab):
        with pytest.raises(ValueError):
            Word((0, 2), ab)

    def test_lexicographic_order(self, ab):
        assert W("a", ab) < W("ab", ab) < W("b", ab)
        assert W("abab", ab) < W("abb", ab)
        assert not W("", ab) > W("", ab)

    def test_slicing(self, abn):
        w = W("banana", abn)
        assert str(w[1:4]) == "ana"
        assert w[0] == abn.index("b")


class TestScatteredFactorCount:
    def test_paper_examples(self, ab):
        assert scattered_factor_count(W("baba", ab), W("ba", ab)) == 3
        assert scattered_factor_count(W("abba", ab), W("ab", ab)) == 2
        assert scattered_factor_count(W("abba", ab), W("ba", ab)) == 2

    def test_empty_pattern(self, ab):
        for text in ("", "a", "abba"):
            assert scattered_factor_count(W(text, ab), W("", ab)) == 1

    def test_single_letter_is_count(self, abn):
        w = W("banana", abn)
        assert scattered_factor_count(w, W("a", abn)) == 3
        assert scattered_factor_count(w, W("n", abn)) == 2

    def test_longer_pattern_is_zero(self, ab):
        assert scattered_factor_count(W("ab", ab), W("aba", ab)) == 0

    def test_mismatched_alphabets(self, ab, abn):
        with pytest.raises(AlphabetMismatchError):
            scattered_factor_count(W("ab", ab), W("ab", abn))

    def test_agrees_with_naive_enumeration_exhaustively(self, ab):
        words = all_words(ab, 6)
        for w in words:
            for u in words:
                if len(u) <= len(w):
                    assert scattered_factor_count(w, u) == naive_count(w, u)

    def test_agrees_with_naive_on_random_ternary(self, abc):
        import random

        rng = random.Random(7)
        for _ in range(200):
            w = Word(tuple(rng.randrange(3) for _ in range(rng.randint(0, 10))), abc)
            u = Word(tuple(rng.randrange(3) for _ in range(rng.randint(0, 5))), abc)
            assert scattered_factor_count(w, u) == naive_count(w, u)

    def test_spectrum_sums_to_binomial(self, ab):
        for w in all_words(ab, 8, min_len=0):
            for k in range(len(w) + 1):
                total = sum(
                    scattered_factor_count(w, u) for u in words_of_length(ab, k)
                )
                assert total == math.comb(len(w), k)

    @settings(max_examples=60)
    @given(
        st.text(alphabet="ab", max_size=12),
        st.text(alphabet="ab", min_size=1, max_size=4),
        st.sampled_from("ab"),
    )
    def test_appending_never_decreases_counts(self, w_text, u_text, extra):
        ab = Alphabet.from_string("ab")
        w, u = Word.parse(w_text, ab), Word.parse(u_text, ab)
        extended = Word.parse(w_text + extra, ab)
        assert scattered_factor_count(extended, u) >= scattered_factor_count(w, u)

    def test_big_counts_are_exact(self, ab):
        w = Word((0,) * 100, ab)
        u = Word((0,) * 50, ab)
        assert scattered_factor_count(w, u) == math.comb(100, 50)


class TestParikh:
    def test_banana(self, abn):
        assert parikh(W("banana", abn)) == (3, 1, 2)

    def test_empty(self, abn):
        assert parikh(W("", abn)) == (0, 0, 0)

    def test_binary(self, ab):
        assert parikh(W("aab", ab)) == (2, 1)


class TestBruteOracle:
    def test_abba_not_determined_by_ab_ba(self, ab):
        factors = [W("ab", ab), W("ba", ab)]
        assert not is_uniquely_determined_brute(W("abba", ab), factors)
        witness = brute_distinguishing_witness(W("abba", ab), factors)
        assert str(witness) == "baab"

    def test_abba_determined_by_three(self, ab):
        factors = [W("a", ab), W("ab", ab), W("abb", ab)]
        assert is_uniquely_determined_brute(W("abba", ab), factors)

    def test_constant_word_determined_by_letter(self, ab):
        assert is_uniquely_determined_brute(W("aaaa", ab), [W("a", ab)])

    def test_cap_names_the_limit(self, ab):
        with pytest.raises(EnumerationCapExceeded, match="cap of 16"):
            is_uniquely_determined_brute(W("aaaaa", ab), [W("a", ab)], cap=16)
