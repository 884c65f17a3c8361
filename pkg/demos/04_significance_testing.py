"""Pairwise Wilcoxon signed-rank testing between systems.

The paired observations are the N x N matrix cells of the two systems:
raw cells for the absolute (stiffness) view, diagonal-normalized cells
for the relative (stableness) view.

Run: python demos/04_significance_testing.py
"""

import random

import numpy as np

from crosseval import CrossMatrix, compare_systems, wilcoxon_signed_rank

# Small samples get an exact p-value from the full sign-assignment null.
result = wilcoxon_signed_rank([1, 2, 3, 4, 5, 6], [0, 0, 0, 0, 0, 0])
print(f"six positive differences: W={result.statistic} p={result.p_two_sided} "
      f"({result.method}, significant={result.significant_at_alpha})")

result = wilcoxon_signed_rank([1, 2, 3, 4, 5], [0, 0, 0, 0, 0])
print(f"five positive differences: p={result.p_two_sided} -> not significant at 0.05")

# Beyond 25 effective pairs the tie-corrected normal approximation kicks in.
rng = random.Random(1)
x = [rng.random() for _ in range(40)]
y = [rng.random() * 0.8 for _ in range(40)]
result = wilcoxon_signed_rank(x, y)
print(f"n=40: p={result.p_two_sided:.5f} via {result.method}")

# Matrix-level comparison: pair the cells of two systems.
order = ("a", "b")
system_a = CrossMatrix("A", "rouge1", order, np.asarray([[48.0, 40.0], [41.0, 45.0]]))
system_b = CrossMatrix("B", "rouge1", order, np.asarray([[61.0, 43.0], [46.0, 69.0]]))

for measure in ("cells", "cells-normalized"):
    result = compare_systems(system_a, system_b, measure=measure)
    print(f"{measure}: n={result.n_effective} W={result.statistic} "
          f"p={result.p_two_sided} significant={result.significant_at_alpha}")
