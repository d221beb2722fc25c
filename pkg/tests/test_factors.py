import random

import pytest

from ebwt.errors import ResourceLimitError
from ebwt.factors import (
    FactorStats,
    count_distinct_factors,
    debruijn_factor_witness,
    distinct_factors,
    factor_stats,
    max_factors_exhaustive,
    repeated_factor_lower_bound,
)
from ebwt.words import Word

from helpers import AB, ABC, W, all_words, brute_distinct_factors


class TestDistinctFactors:
    @pytest.mark.parametrize("text,expected", [
        ("aaa", 3),
        ("abab", 7),
        ("aab", 5),
    ])
    def test_binary_examples(self, text, expected):
        assert distinct_factors(W(text)) == expected

    def test_full_alphabet_attains_ceiling(self):
        assert distinct_factors(W("abc", ABC)) == 6

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            distinct_factors(Word(AB, ()))

    def test_exhaustive_binary_matches_brute_force(self):
        for n in range(1, 11):
            for codes in all_words(2, n):
                assert count_distinct_factors(codes) == brute_distinct_factors(codes)

    def test_random_ternary_matches_brute_force(self):
        rng = random.Random(0)
        for _ in range(10_000):
            length = rng.randint(1, 64)
            text = "".join(rng.choice("abc") for _ in range(length))
            assert count_distinct_factors(text) == brute_distinct_factors(text), text

    def test_total_occurrences_is_triangular(self):
        # every (start, end) position pair is one occurrence
        for text in ["a", "abab", "aabbab", "abcabc"]:
            n = len(text)
            occurrences = [
                text[i:j] for i in range(n) for j in range(i + 1, n + 1)
            ]
            assert len(occurrences) == n * (n + 1) // 2


class TestFactorStats:
    def test_wraps_count(self):
        stats = factor_stats(W("abab"))
        assert (stats.length, stats.distinct_count, stats.alphabet_size) == (4, 7, 2)

    def test_envelope_validated(self):
        FactorStats(3, 3, 2)
        FactorStats(3, 6, 3)
        with pytest.raises(ValueError):
            FactorStats(3, 2, 2)
        with pytest.raises(ValueError):
            FactorStats(3, 7, 3)

    def test_envelope_exhaustive_binary(self):
        for n in range(1, 11):
            ceiling = n * (n + 1) // 2
            best = 0
            for codes in all_words(2, n):
                count = count_distinct_factors(codes)
                best = max(best, count)
                assert n <= count <= ceiling
                assert (count == n) == (len(set(codes)) == 1)
                # a single word attains the ceiling only with all letters distinct
                assert (count == ceiling) == (len(set(codes)) == n)
            # the ceiling is attained by some word exactly when n <= k
            assert (best == ceiling) == (n <= 2)


class TestMaxFactorsExhaustive:
    @pytest.mark.parametrize("n,k,expected,witness", [
        (2, 2, 3, "ab"),
        (3, 2, 5, "aab"),
        (1, 2, 1, "a"),
    ])
    def test_examples(self, n, k, expected, witness):
        best, word = max_factors_exhaustive(n, k)
        assert best == expected
        assert str(word) == witness

    def test_witness_is_lexicographically_least(self):
        best, word = max_factors_exhaustive(5, 2)
        candidates = [
            codes for codes in all_words(2, 5)
            if brute_distinct_factors(codes) == best
        ]
        assert word.codes == min(candidates)

    def test_guard(self):
        with pytest.raises(ResourceLimitError):
            max_factors_exhaustive(30, 2, max_words=2**20)


class TestRepeatedFactorBound:
    def test_derived_values(self):
        assert repeated_factor_lower_bound(10, 2) == 13
        assert repeated_factor_lower_bound(3, 2) == 1

    def test_requires_n_above_k(self):
        with pytest.raises(ValueError):
            repeated_factor_lower_bound(2, 2)
        with pytest.raises(ValueError):
            repeated_factor_lower_bound(5, 1)

    def test_consistent_with_exhaustive_max(self):
        best, _ = max_factors_exhaustive(3, 2)
        assert best <= 3 * 4 // 2 - repeated_factor_lower_bound(3, 2)

    def test_refines_ceiling_exhaustively(self):
        for n in range(3, 13):
            best, _ = max_factors_exhaustive(n, 2)
            assert best <= n * (n + 1) // 2 - repeated_factor_lower_bound(n, 2)


class TestDeBruijnWitness:
    def test_span4_witness(self):
        result = debruijn_factor_witness(16, 2)
        assert str(result.word) == "aaaabaabbababbbb"
        assert result.span == 4
        assert result.lower_bound == 91
        assert result.distinct_count == 105
        assert result.distinct_count == brute_distinct_factors(str(result.word))

    def test_small_witness_bound(self):
        result = debruijn_factor_witness(5, 2)
        assert result.span == 3
        assert result.lower_bound == 6
        assert result.distinct_count >= 6

    def test_smallest_nontrivial_case(self):
        # n = k + 1 forces span 2 and a positive floor
        result = debruijn_factor_witness(3, 2)
        assert result.span == 2
        assert result.lower_bound == 3

    def test_requires_n_above_k(self):
        with pytest.raises(ValueError):
            debruijn_factor_witness(2, 2)

    def test_prefix_of_least_word_and_exact_count(self):
        from ebwt.debruijn import least_debruijn_word
        for n, k in [(10, 2), (40, 3), (100, 2)]:
            result = debruijn_factor_witness(n, k)
            full = least_debruijn_word(k, result.span)
            assert result.word.codes == full.codes[:n]
            assert result.distinct_count == brute_distinct_factors(result.word.codes)
            assert result.distinct_count >= result.lower_bound
