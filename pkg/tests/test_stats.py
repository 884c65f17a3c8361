import random

import numpy as np
import pytest

from crosseval.crossgrid import CrossMatrix
from crosseval.stats import compare_systems, wilcoxon_signed_rank

from grids import TOY_A, TOY_B
from oracles import wilcoxon_enumerate


def random_case(rng, n, ties=False):
    if ties:
        x = [rng.randint(0, 4) * 0.5 for _ in range(n)]
        y = [rng.randint(0, 4) * 0.5 for _ in range(n)]
    else:
        x = [rng.random() for _ in range(n)]
        y = [rng.random() for _ in range(n)]
    return x, y


class TestWilcoxon:
    def test_six_positive_distinct(self):
        result = wilcoxon_signed_rank([1, 2, 3, 4, 5, 6], [0, 0, 0, 0, 0, 0])
        assert result.n_effective == 6
        assert result.statistic == 0.0
        assert result.p_two_sided == 2 / 64
        assert result.method == "exact"
        assert result.significant_at_alpha

    def test_five_positive(self):
        result = wilcoxon_signed_rank([1, 2, 3, 4, 5], [0, 0, 0, 0, 0])
        assert result.p_two_sided == 2 / 32
        assert not result.significant_at_alpha

    def test_identical_sequences(self):
        result = wilcoxon_signed_rank([1.0, 2.0], [1.0, 2.0])
        assert result.p_two_sided == 1.0
        assert result.n_effective == 0
        assert not result.significant_at_alpha

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            wilcoxon_signed_rank([1.0], [1.0, 2.0])

    def test_symmetry_in_arguments(self):
        rng = random.Random(71)
        for _ in range(200):
            x, y = random_case(rng, rng.randint(1, 10), ties=rng.random() < 0.5)
            a = wilcoxon_signed_rank(x, y)
            b = wilcoxon_signed_rank(y, x)
            assert a.p_two_sided == b.p_two_sided
            assert a.statistic == b.statistic

    def test_exact_matches_enumeration(self):
        rng = random.Random(73)
        for _ in range(400):
            n = rng.randint(1, 12)
            x, y = random_case(rng, n, ties=rng.random() < 0.5)
            result = wilcoxon_signed_rank(x, y, method="exact")
            n_eff, w, p = wilcoxon_enumerate(x, y)
            assert result.n_effective == n_eff
            assert result.statistic == w
            assert result.p_two_sided == p

    def test_p_in_unit_interval(self):
        rng = random.Random(79)
        for _ in range(200):
            n = rng.randint(1, 30)
            x, y = random_case(rng, n)
            result = wilcoxon_signed_rank(x, y)
            assert 0.0 < result.p_two_sided <= 1.0

    def test_auto_method_rule(self):
        rng = random.Random(83)
        x, y = random_case(rng, 25)
        assert wilcoxon_signed_rank(x, y).method == "exact"
        x, y = random_case(rng, 26)
        assert wilcoxon_signed_rank(x, y).method == "normal-approx"

    def test_normal_approx_close_to_exact(self):
        rng = random.Random(89)
        for _ in range(100):
            n = rng.randint(20, 25)
            x, y = random_case(rng, n)
            exact = wilcoxon_signed_rank(x, y, method="exact")
            approx = wilcoxon_signed_rank(x, y, method="normal-approx")
            assert abs(exact.p_two_sided - approx.p_two_sided) < 0.01

    def test_all_positive_shift_keeps_p(self):
        # with every difference already positive, shifting x upward cannot
        # raise the p-value
        rng = random.Random(97)
        for _ in range(100):
            n = rng.randint(2, 10)
            y = [rng.random() for _ in range(n)]
            x = [v + rng.uniform(0.01, 1.0) for v in y]
            base = wilcoxon_signed_rank(x, y).p_two_sided
            shifted = wilcoxon_signed_rank([v + 0.5 for v in x], y).p_two_sided
            assert shifted <= base

    def test_zero_differences_dropped(self):
        result = wilcoxon_signed_rank([1, 5, 5, 9], [1, 2, 3, 4])
        assert result.n_effective == 3


class TestScipyAgreement:
    def test_matches_scipy_exact_without_ties(self):
        scipy_stats = pytest.importorskip("scipy.stats")
        rng = random.Random(101)
        for _ in range(100):
            n = rng.randint(3, 20)
            x = [rng.random() for _ in range(n)]
            y = [rng.random() for _ in range(n)]
            ours = wilcoxon_signed_rank(x, y, method="exact")
            ref = scipy_stats.wilcoxon(x, y, alternative="two-sided", mode="exact")
            assert ours.statistic == ref.statistic
            assert ours.p_two_sided == pytest.approx(ref.pvalue, rel=1e-12)


def toy_matrix(values, system, order=("a", "b")):
    return CrossMatrix(system=system, metric="rouge1", dataset_order=order,
                       values=np.asarray(values, dtype=float))


class TestCompareSystems:
    def test_self_comparison(self):
        a = toy_matrix(TOY_A, "A")
        result = compare_systems(a, a)
        assert result.p_two_sided == 1.0

    def test_toy_pair(self):
        result = compare_systems(toy_matrix(TOY_A, "A"), toy_matrix(TOY_B, "B"))
        assert result.n_effective == 4
        assert result.statistic == 0.0
        assert result.p_two_sided == 2 / 16
        assert not result.significant_at_alpha

    def test_five_datasets_use_exact(self):
        rng = random.Random(103)
        order = tuple(f"d{i}" for i in range(5))
        a = toy_matrix([[rng.uniform(1, 9) for _ in range(5)] for _ in range(5)], "A", order)
        b = toy_matrix([[rng.uniform(1, 9) for _ in range(5)] for _ in range(5)], "B", order)
        result = compare_systems(a, b)
        assert result.n_effective <= 25
        assert result.method == "exact"

    def test_normalized_measure_drops_diagonal(self):
        result = compare_systems(
            toy_matrix(TOY_A, "A"), toy_matrix(TOY_B, "B"), measure="cells-normalized"
        )
        # both normalized diagonals are exactly 100, leaving N^2 - N pairs
        assert result.n_effective == 2

    def test_order_mismatch_rejected(self):
        a = toy_matrix(TOY_A, "A", order=("a", "b"))
        b = toy_matrix(TOY_B, "B", order=("b", "a"))
        with pytest.raises(ValueError):
            compare_systems(a, b)
