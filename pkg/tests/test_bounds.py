"""Exact bound formulas and their strict-improvement comparisons."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest

from wordbinom import (
    Word,
    WordOracle,
    adaptive_reconstruct,
    binary_baseline,
    count_small_coefficient_words,
    general_baseline,
    kr_threshold,
    lyndon_count,
    lyndon_words,
    mobius,
    our_binary_bound,
    our_general_bound,
)
from wordbinom.bounds import (
    QuadraticValue,
    binary_bound_report,
    frequency_ascending_order,
    general_bound_report,
    worst_case_general_bound,
)
from wordbinom.binary import BlockDecomposition, block_coefficient

from helpers import all_words


def W(text, alphabet):
    return Word.parse(text, alphabet)


class TestMobius:
    def test_examples(self):
        assert mobius(1) == 1
        assert mobius(4) == 0
        assert mobius(6) == 1
        assert mobius(30) == -1
        assert mobius(7) == -1

    def test_divisor_sums_vanish(self):
        for n in range(2, 200):
            assert sum(mobius(d) for d in range(1, n + 1) if n % d == 0) == 0


class TestLyndonCount:
    def test_binary_examples(self):
        assert [lyndon_count(2, i) for i in (1, 2, 3)] == [2, 1, 2]
        assert lyndon_count(2, 6) == 9

    def test_unary(self):
        assert lyndon_count(1, 1) == 1
        assert all(lyndon_count(1, i) == 0 for i in range(2, 8))

    def test_matches_enumeration_up_to_12(self, ab):
        words = lyndon_words(ab, 12)
        for length in range(1, 13):
            assert lyndon_count(2, length) == sum(
                1 for w in words if len(w) == length
            )


class TestKrThreshold:
    def test_examples(self):
        assert kr_threshold(49) == 21
        assert kr_threshold(1) == 7
        assert kr_threshold(16) == 14

    def test_perfect_square_boundaries(self):
        for k in range(1, 80):
            assert kr_threshold(k * k) == 16 * k // 7 + 5


class TestBinaryBaseline:
    def test_small_value(self):
        assert kr_threshold(7) == 11
        assert binary_baseline(7) == sum(lyndon_count(2, i) for i in range(1, 12))

    def test_beats_half_length(self):
        assert binary_baseline(7) > 7 // 2 + 1
        assert binary_baseline(100) > 51

    def test_strict_improvement_sweep_small(self):
        for n in range(7, 400):
            assert binary_baseline(n) > n // 2 + 1


class TestQuadraticValue:
    def test_square_radicand_folds(self):
        v = QuadraticValue.of(1, 3, 4)
        assert v.rational == 7 and v.surd == 0

    def test_comparisons_are_exact(self):
        root2 = QuadraticValue.of(0, 1, 2)
        assert root2 > Fraction(14142, 10000)
        assert root2 < Fraction(14143, 10000)
        assert (root2 - root2).sign() == 0

    def test_floor(self):
        assert math.floor(QuadraticValue.of(0, 1, 2)) == 1
        assert math.floor(QuadraticValue.of(-1, -1, 2)) == -3
        assert math.floor(QuadraticValue.of(Fraction(7, 2))) == 3

    def test_mixed_radicands_rejected(self):
        with pytest.raises(ValueError):
            QuadraticValue.of(0, 1, 2) + QuadraticValue.of(0, 1, 3)


class TestGeneralBaseline:
    def test_q3_is_rational_and_explicit_at_threshold_7(self):
        value = general_baseline(1, 3)  # threshold is 7 here
        expected = sum(Fraction(2**i - 1, 3 * i) for i in range(1, 8))
        assert value.surd == 0
        assert value.rational == expected

    def test_q4_matches_float_estimate(self):
        value = general_baseline(25, 4)
        approx = sum(
            ((5 ** (i / 2)) - 1) / (4 * i) for i in range(1, kr_threshold(25) + 1)
        )
        assert abs(float(value) - approx) < 1e-9

    def test_monotone_in_length(self):
        values = [general_baseline(n, 4) for n in (3, 10, 50, 200)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_rejects_small_alphabets(self):
        with pytest.raises(ValueError):
            general_baseline(10, 2)

    def test_strict_improvement_spot_checks(self):
        assert general_baseline(16, 3) > worst_case_general_bound(16, 3)
        assert general_baseline(25, 4) > worst_case_general_bound(25, 4)

    def test_strict_improvement_sweep_small(self):
        for q in (3, 4, 5):
            for n in range(q - 1, 120):
                assert general_baseline(n, q) > worst_case_general_bound(n, q)


class TestOurBounds:
    def test_binary_examples(self, ab):
        assert our_binary_bound(W("bbbbaabbaa", ab)) == 5
        assert our_binary_bound(W("aaaa", ab)) == 1
        assert our_binary_bound(W("ab", ab)) == 2

    def test_general_banana_orders(self, abn):
        banana = W("banana", abn)
        # the formula gives 13 for the alphabet order a < b < n
        assert our_general_bound(banana) == 13
        assert our_general_bound(banana, (1, 2, 0)) == 10
        assert frequency_ascending_order(banana) == (1, 2, 0)
        assert our_general_bound(banana, frequency_ascending_order(banana)) == 10

    def test_frequency_order_is_optimal_on_small_words(self, abc):
        for w in all_words(abc, 5):
            best = min(
                our_general_bound(w, order)
                for order in itertools.permutations(range(3))
            )
            assert our_general_bound(w, frequency_ascending_order(w)) == best

    def test_at_most_q_times_length(self, abc):
        for w in all_words(abc, 5):
            assert our_general_bound(w) <= 3 * len(w)


class TestCountSmallCoefficientWords:
    def test_matches_exhaustive_profiles_up_to_9(self):
        for n in range(0, 10):
            for block_count in range(n + 1):
                budget = n - block_count
                profiles = [
                    gaps
                    for gaps in _compositions(budget, block_count + 1)
                ]
                for level in range(block_count + 1):
                    tallies = {}
                    for gaps in profiles:
                        dec = BlockDecomposition(gaps, n, block_count)
                        value = block_coefficient(dec, level)
                        tallies[value] = tallies.get(value, 0) + 1
                    for value in range(level + 1):
                        assert count_small_coefficient_words(
                            n, block_count, level, value
                        ) == tallies.get(value, 0), (n, block_count, level, value)

    def test_closed_form_shortcut(self):
        for n in range(0, 12):
            for block_count in range(n + 1):
                for level in range(1, block_count + 1):
                    for value in range(level + 1):
                        remainder = n - block_count - value
                        expected = (
                            math.comb(remainder + level - 1, level - 1)
                            if remainder >= 0
                            else 0
                        )
                        assert count_small_coefficient_words(
                            n, block_count, level, value
                        ) == expected

    def test_edge_values(self):
        assert count_small_coefficient_words(10, 4, 2, 2) == 5
        assert count_small_coefficient_words(7, 4, 3, 3) == 1  # remainder zero
        assert count_small_coefficient_words(5, 5, 0, 0) == 1
        assert count_small_coefficient_words(6, 5, 0, 0) == 0

    def test_value_above_level_rejected(self):
        with pytest.raises(ValueError):
            count_small_coefficient_words(10, 4, 2, 3)


class TestSmallLengthExceptions:
    def test_adaptive_query_maxima_for_tiny_lengths(self, ab):
        # at most one coefficient beyond the letter-count query for n <= 3,
        # two for n = 4, and n - 2 for n in {5, 6}
        maxima = {}
        for n in range(1, 7):
            worst = 0
            for letters in itertools.product((0, 1), repeat=n):
                w = Word(letters, ab)
                transcript = adaptive_reconstruct(WordOracle(w))
                assert transcript.outcome == w
                worst = max(worst, len(transcript))
            maxima[n] = worst
        assert maxima == {1: 1, 2: 2, 3: 2, 4: 3, 5: 3, 6: 4}
        for n in (1, 2, 3):
            assert maxima[n] <= 1 + 1
        assert maxima[4] <= 2 + 1
        for n in (5, 6):
            assert maxima[n] <= (n - 2) + 1


class TestReports:
    def test_binary_report_row(self):
        report = binary_bound_report(7)
        assert (report.n, report.q, report.kr_threshold) == (7, 2, 11)
        assert report.baseline == 412
        assert report.ours_worst_case == 4
        assert report.margin == 408

    def test_general_report_margin_positive(self):
        report = general_bound_report(30, 4)
        assert report.margin > 0


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)
