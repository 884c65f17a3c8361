"""Cross-dataset matrices: stiffness and stableness in two views.

Rows are training datasets, columns are test datasets, so the diagonal
holds in-dataset results. Stiffness is the mean of all cells (absolute
transfer performance); stableness is the mean of the cells after each
column is normalized by its diagonal (how close transfer stays to the
in-dataset level; it can exceed 100 when transfer beats in-dataset).

Run: python demos/03_cross_matrix_holistics.py
"""

import numpy as np

from crosseval import CrossMatrix, diff, in_dataset_mean, normalize, stableness, stiffness

# Two systems evaluated on datasets a and b.
system_a = CrossMatrix("A", "rouge1", ("a", "b"), np.asarray([[48.0, 40.0], [41.0, 45.0]]))
system_b = CrossMatrix("B", "rouge1", ("a", "b"), np.asarray([[61.0, 43.0], [46.0, 69.0]]))

for matrix in (system_a, system_b):
    print(f"system {matrix.system}")
    print("  raw grid:\n", matrix.values)
    print("  normalized:\n", np.round(normalize(matrix), 2))
    print(f"  stiffness      {stiffness(matrix):.2f}")
    print(f"  stableness     {stableness(matrix):.2f}")
    print(f"  in-dataset mean {in_dataset_mean(matrix):.2f}")
    print()

# B wins on absolute transfer performance, A on relative robustness:
# the two views deliberately disagree here.
print("stiffness:  A", stiffness(system_a), " B", stiffness(system_b))
print("stableness: A", round(stableness(system_a), 2), " B", round(stableness(system_b), 2))

# Cellwise comparison grids, raw and normalized.
print("\nA - B raw:\n", diff(system_a, system_b))
print("A - B normalized:\n", np.round(diff(system_a, system_b, normalized=True), 2))
