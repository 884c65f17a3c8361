"""Cross-dataset matrices and the holistic stiffness/stableness measures.

A matrix holds one system's scores for one metric over a fixed dataset
ordering: rows are training datasets, columns are test datasets, so the
diagonal is the in-dataset result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

# Metrics whose per-sample values live in [0, 1] and are reported x100
# in matrices (copy_length stays in its native token unit).
PERCENT_METRICS = frozenset(
    {"rouge1", "rouge2", "rougeL", "factuality", "coverage", "novelty",
     "repetition", "fusion"}
)


class CellMissingError(KeyError):
    """A (train, test) cell has no stored aggregate."""


@dataclass(frozen=True)
class CrossMatrix:
    system: str
    metric: str
    dataset_order: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        n = len(self.dataset_order)
        if n < 2:
            raise ValueError("a cross matrix needs at least 2 datasets")
        if len(set(self.dataset_order)) != n:
            raise ValueError("dataset_order contains duplicates")
        if values.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} grid, got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("matrix cells must be finite")

    @property
    def n(self) -> int:
        return len(self.dataset_order)


def _as_grid(matrix) -> np.ndarray:
    values = matrix.values if isinstance(matrix, CrossMatrix) else np.asarray(matrix, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise ValueError("expected a square grid")
    return values


def build_matrix(
    store,
    system: str,
    metric: str,
    dataset_order: Sequence[str],
    fingerprint: str = "",
) -> CrossMatrix:
    """Assemble the full matrix from stored cell aggregates.

    Fails (naming the train->test pair) if any cell is missing; fractional
    metrics are scaled to percent.
    """
    order = tuple(dataset_order)
    scale = 100.0 if metric in PERCENT_METRICS else 1.0
    n = len(order)
    values = np.empty((n, n), dtype=float)
    for i, train in enumerate(order):
        for j, test in enumerate(order):
            try:
                cell = store.get_cell(system, train, test, metric, fingerprint)
            except CellMissingError:
                raise CellMissingError(f"missing {train}->{test} for {system}/{metric}")
            values[i, j] = cell * scale
    return CrossMatrix(system=system, metric=metric, dataset_order=order, values=values)


def normalize(matrix) -> np.ndarray:
    """Divide each cell by its column's diagonal value, x100.

    The diagonal of the result is exactly 100 by construction.
    """
    values = _as_grid(matrix)
    diag = np.diagonal(values)
    if np.any(diag == 0):
        order = (
            matrix.dataset_order
            if isinstance(matrix, CrossMatrix)
            else [str(i) for i in range(values.shape[0])]
        )
        zeros = [order[j] for j in np.flatnonzero(diag == 0)]
        raise ValueError(f"zero in-dataset value for {', '.join(zeros)}")
    return values / diag[np.newaxis, :] * 100.0


def normalized_matrix(matrix: CrossMatrix) -> CrossMatrix:
    return CrossMatrix(
        system=matrix.system,
        metric=matrix.metric,
        dataset_order=matrix.dataset_order,
        values=normalize(matrix),
    )


def stiffness(matrix) -> float:
    """Mean of all N^2 cells: absolute cross-dataset performance."""
    return float(np.mean(_as_grid(matrix)))


def stableness(matrix) -> float:
    """Mean of the diagonal-normalized cells, in percent.

    Not capped at 100: off-diagonal cells above their column diagonal
    push it higher.
    """
    return float(np.mean(normalize(matrix)))


@dataclass(frozen=True)
class HolisticScores:
    stiffness: float
    stableness: float


def holistic_scores(matrix) -> HolisticScores:
    return HolisticScores(stiffness=stiffness(matrix), stableness=stableness(matrix))


def in_dataset_mean(matrix) -> float:
    """Mean of the diagonal (train = test) cells."""
    return float(np.mean(np.diagonal(_as_grid(matrix))))


def diff(
    matrix_a: CrossMatrix, matrix_b: CrossMatrix, normalized: bool = False
) -> np.ndarray:
    """Cellwise A - B, on raw or diagonal-normalized values."""
    if matrix_a.dataset_order != matrix_b.dataset_order:
        raise ValueError("matrices have different dataset orders")
    if matrix_a.metric != matrix_b.metric:
        raise ValueError("matrices have different metrics")
    if normalized:
        return normalize(matrix_a) - normalize(matrix_b)
    return matrix_a.values - matrix_b.values


def rank_systems(values: Mapping[str, float]) -> list[str]:
    """Systems in descending score order; ties broken by name ascending."""
    return [name for name, _ in sorted(values.items(), key=lambda kv: (-kv[1], kv[0]))]


def row_col_averages(grid) -> tuple[np.ndarray, np.ndarray, float]:
    """Row means, column means and the overall mean of a grid."""
    values = _as_grid(grid)
    return values.mean(axis=1), values.mean(axis=0), float(values.mean())
