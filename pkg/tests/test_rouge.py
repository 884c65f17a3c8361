import random

import pytest

from crosseval.corpus import tokenize
from crosseval.rouge import lcs_length, ngrams, rouge_l, rouge_n, score_pair

from oracles import lcs_recursive, rouge_l_prf, rouge_n_prf

CAND = tokenize("the cat sat on the mat").tokens
REF = tokenize("the cat is on the mat").tokens


class TestNgrams:
    def test_unigram_counts(self):
        assert ngrams(["a", "b", "a"], 1) == {("a",): 2, ("b",): 1}

    def test_bigram_counts(self):
        assert ngrams(["a", "b", "a"], 2) == {("a", "b"): 1, ("b", "a"): 1}

    def test_short_input(self):
        assert ngrams(["a"], 2) == {}

    def test_n_zero_rejected(self):
        with pytest.raises(ValueError):
            ngrams(["a"], 0)

    def test_total_count(self):
        rng = random.Random(7)
        for _ in range(50):
            tokens = [rng.choice("abcde") for _ in range(rng.randint(0, 10))]
            for n in (1, 2, 3):
                total = sum(ngrams(tokens, n).values())
                assert total == max(0, len(tokens) - n + 1)


class TestRougeN:
    def test_unigram_worked_example(self):
        score = rouge_n(CAND, REF, 1)
        assert score.precision == score.recall == score.f1 == 5 / 6

    def test_bigram_worked_example(self):
        assert rouge_n(CAND, REF, 2).f1 == 3 / 5

    def test_identity(self):
        assert rouge_n(CAND, CAND, 1).f1 == 1.0
        assert rouge_n(CAND, CAND, 2).f1 == 1.0

    def test_empty_sides(self):
        assert rouge_n([], REF, 1).f1 == 0.0
        assert rouge_n(CAND, [], 1).f1 == 0.0


class TestRougeL:
    def test_flat_worked_example(self):
        score = rouge_l(CAND, REF, mode="flat")
        assert score.precision == score.recall == score.f1 == 5 / 6

    def test_identical_texts_both_modes(self):
        assert rouge_l(CAND, CAND, mode="flat").f1 == 1.0
        assert rouge_l([CAND], [CAND], mode="union").f1 == 1.0

    def test_disjoint_vocabulary(self):
        assert rouge_l(["x", "y"], ["p", "q"], mode="flat").f1 == 0.0
        assert rouge_l([["x", "y"]], [["p", "q"]], mode="union").f1 == 0.0

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            rouge_l(CAND, REF, mode="bogus")

    def test_union_spans_candidate_sentences(self):
        # each reference-sentence token is matched by some candidate sentence
        ref_sents = [["a", "b", "c", "d"]]
        cand_sents = [["a", "b"], ["c", "d"]]
        score = rouge_l(cand_sents, ref_sents, mode="union")
        assert score.recall == 1.0
        assert score.precision == 1.0

    def test_union_does_not_double_count(self):
        ref_sents = [["a", "b"]]
        cand_sents = [["a", "b"], ["a", "b"]]
        score = rouge_l(cand_sents, ref_sents, mode="union")
        assert score.recall == 1.0
        assert score.precision == 0.5


class TestSymmetry:
    def test_f1_swap_symmetry(self):
        rng = random.Random(11)
        for _ in range(300):
            a = [rng.choice("abcde") for _ in range(rng.randint(0, 12))]
            b = [rng.choice("abcde") for _ in range(rng.randint(0, 12))]
            for n in (1, 2):
                assert rouge_n(a, b, n).f1 == rouge_n(b, a, n).f1
            assert rouge_l(a, b, "flat").f1 == rouge_l(b, a, "flat").f1


class TestOracleEquivalence:
    def test_against_brute_force(self):
        rng = random.Random(13)
        for _ in range(2000):
            a = [rng.choice("abcde") for _ in range(rng.randint(0, 12))]
            b = [rng.choice("abcde") for _ in range(rng.randint(0, 12))]
            for n in (1, 2):
                got = rouge_n(a, b, n)
                assert (got.precision, got.recall, got.f1) == rouge_n_prf(a, b, n)
            got = rouge_l(a, b, "flat")
            assert (got.precision, got.recall, got.f1) == rouge_l_prf(a, b)

    def test_lcs_against_recursion(self):
        rng = random.Random(17)
        for _ in range(500):
            a = [rng.choice("abcde") for _ in range(rng.randint(0, 12))]
            b = [rng.choice("abcde") for _ in range(rng.randint(0, 12))]
            assert lcs_length(a, b) == lcs_recursive(a, b)


class TestPrefixRecall:
    def test_recall_nondecreasing_in_contained_prefix(self):
        rng = random.Random(19)
        for _ in range(100):
            ref = [rng.choice("abcde") for _ in range(rng.randint(2, 12))]
            previous = 0.0
            for k in range(1, len(ref) + 1):
                recall = rouge_n(ref[:k], ref, 1).recall
                assert recall >= previous
                previous = recall


class TestScorePair:
    def test_all_scores_in_unit_interval(self):
        rng = random.Random(23)
        words = ["alpha", "beta", "gamma", "delta", "epsilon"]
        for _ in range(100):
            cand = " ".join(rng.choice(words) for _ in range(rng.randint(1, 15)))
            ref = " ".join(rng.choice(words) for _ in range(rng.randint(1, 15)))
            for score in score_pair(cand, ref, None, None).values():
                for value in (score.precision, score.recall, score.f1):
                    assert 0.0 <= value <= 1.0

    def test_auto_mode_uses_union_when_presplit(self):
        summary = "the cat sat. the dog ran."
        scores_flat = score_pair(summary, summary, None, None, stemming=False)
        scores_union = score_pair(
            summary, summary,
            ["the cat sat.", "the dog ran."], ["the cat sat.", "the dog ran."],
            stemming=False,
        )
        assert scores_flat["rougeL"].f1 == 1.0
        assert scores_union["rougeL"].f1 == 1.0
