"""Wilcoxon signed-rank test for pairwise system comparisons.

The exact two-sided p-value is computed from the null distribution of the
positive-rank sum (all 2^n sign assignments equally likely), which stays
valid under tied ranks; the normal approximation with tie and continuity
corrections is used for larger samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .crossgrid import CrossMatrix, normalize

EXACT_LIMIT = 25


@dataclass(frozen=True)
class TestResult:
    n_effective: int
    statistic: float
    p_two_sided: float
    method: str
    significant_at_alpha: bool
    alpha: float


def _average_ranks_doubled(magnitudes: Sequence[float]) -> list[int]:
    """Ranks of |d| with ties averaged, scaled by 2 so they stay integral."""
    order = sorted(range(len(magnitudes)), key=lambda i: magnitudes[i])
    doubled = [0] * len(magnitudes)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and magnitudes[order[j + 1]] == magnitudes[order[i]]:
            j += 1
        # positions i..j (0-based) share rank (i+1 + j+1) / 2
        for k in range(i, j + 1):
            doubled[order[k]] = i + j + 2
        i = j + 1
    return doubled


def _exact_p(doubled_ranks: Sequence[int], w_doubled: int) -> float:
    """Two-sided exact p: 2 * P(W+ <= w) under the 2^n sign null.

    Computed by counting, over all sign assignments, the rank subsets
    whose sum does not exceed w (a subset-sum distribution, equivalent to
    full enumeration).
    """
    total = sum(doubled_ranks)
    counts = [0] * (total + 1)
    counts[0] = 1
    for r in doubled_ranks:
        for s in range(total, r - 1, -1):
            if counts[s - r]:
                counts[s] += counts[s - r]
    tail = sum(counts[: w_doubled + 1])
    return min(1.0, 2.0 * tail / (1 << len(doubled_ranks)))


def _normal_p(doubled_ranks: Sequence[int], w: float, n: int) -> float:
    """Normal approximation with tie correction and 0.5 continuity
    correction."""
    mean = n * (n + 1) / 4.0
    variance = n * (n + 1) * (2 * n + 1) / 24.0
    tie_sizes: dict[int, int] = {}
    for r in doubled_ranks:
        tie_sizes[r] = tie_sizes.get(r, 0) + 1
    variance -= sum(t**3 - t for t in tie_sizes.values()) / 48.0
    if variance <= 0:
        return 1.0
    z = (w - mean + 0.5) / math.sqrt(variance)
    p = math.erfc(-z / math.sqrt(2.0))
    return min(1.0, p)


def wilcoxon_signed_rank(
    x: Sequence[float],
    y: Sequence[float],
    alpha: float = 0.05,
    method: str = "auto",
) -> TestResult:
    """Two-sided paired test of H0: the paired differences are symmetric
    about zero.

    Zero differences are dropped (Wilcoxon's rule); W = min(W+, W-).
    method "auto" selects the exact distribution for n_effective <= 25
    and the normal approximation beyond.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if method not in ("auto", "exact", "normal-approx"):
        raise ValueError(f"unknown method '{method}'")
    diffs = [float(a) - float(b) for a, b in zip(x, y)]
    diffs = [d for d in diffs if d != 0.0]
    n = len(diffs)
    if n == 0:
        return TestResult(0, 0.0, 1.0, "exact", False, alpha)

    doubled = _average_ranks_doubled([abs(d) for d in diffs])
    w_plus_doubled = sum(r for r, d in zip(doubled, diffs) if d > 0)
    w_minus_doubled = sum(r for r, d in zip(doubled, diffs) if d < 0)
    w_doubled = min(w_plus_doubled, w_minus_doubled)
    w = w_doubled / 2.0

    if method == "exact" or (method == "auto" and n <= EXACT_LIMIT):
        p = _exact_p(doubled, w_doubled)
        used = "exact"
    else:
        p = _normal_p(doubled, w, n)
        used = "normal-approx"
    return TestResult(n, w, p, used, p <= alpha, alpha)


def compare_systems(
    matrix_a: CrossMatrix,
    matrix_b: CrossMatrix,
    measure: str = "cells",
    alpha: float = 0.05,
) -> TestResult:
    """Pair the N^2 cells of two systems' matrices and test them.

    measure "cells" pairs raw values (the stiffness view);
    "cells-normalized" pairs diagonal-normalized values (the stableness
    view, where both diagonals are 100 and drop out as zero differences).
    """
    if matrix_a.dataset_order != matrix_b.dataset_order:
        raise ValueError("matrices have different dataset orders")
    if measure == "cells":
        a, b = matrix_a.values, matrix_b.values
    elif measure == "cells-normalized":
        a, b = normalize(matrix_a), normalize(matrix_b)
    else:
        raise ValueError(f"unknown measure '{measure}'")
    return wilcoxon_signed_rank(a.ravel().tolist(), b.ravel().tolist(), alpha=alpha)
