"""Report emission: ranking tables, matrix CSV/JSON, diff heatmap SVGs,
bias-profile CSV/JSON and significance tables.

All emitters are deterministic: identical inputs produce byte-identical
files. Numbers are rounded half-up at the declared precision; files keep
"\n" line endings on every platform.
"""

from __future__ import annotations

import json
import math
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .bias import BiasProfile
from .crossgrid import CrossMatrix, rank_systems, row_col_averages
from .stats import TestResult


def round_half_up(value: float, ndigits: int = 0) -> float:
    """Round on the shortest decimal repr, ties away from zero."""
    quantum = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def fmt(value: float, ndigits: int = 2) -> str:
    """Fixed-precision decimal string with half-up rounding."""
    value = float(value)
    if not math.isfinite(value):
        return "nan"
    quantum = Decimal(1).scaleb(-ndigits)
    return str(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def _write_text(path: str | Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def write_matrix_csv(
    matrix: CrossMatrix,
    path: str | Path,
    ndigits: int = 2,
    averages: bool = True,
) -> None:
    """Matrix CSV: header of test datasets, one row per train dataset,
    trailing avg row/column."""
    order = matrix.dataset_order
    row_avg, col_avg, overall = row_col_averages(matrix.values)
    lines = ["train\\test," + ",".join(order) + (",avg" if averages else "")]
    for i, train in enumerate(order):
        cells = [fmt(v, ndigits) for v in matrix.values[i]]
        if averages:
            cells.append(fmt(row_avg[i], ndigits))
        lines.append(train + "," + ",".join(cells))
    if averages:
        cells = [fmt(v, ndigits) for v in col_avg]
        lines.append("avg," + ",".join(cells) + "," + fmt(overall, ndigits))
    _write_text(path, "\n".join(lines) + "\n")


def write_matrix_json(matrix: CrossMatrix, path: str | Path, aggregation: str = "") -> None:
    """JSON mirror of the matrix CSV with explicit axis labels and
    full-precision values."""
    row_avg, col_avg, overall = row_col_averages(matrix.values)
    payload = {
        "system": matrix.system,
        "metric": matrix.metric,
        "rows": "train_dataset",
        "columns": "test_dataset",
        "datasets": list(matrix.dataset_order),
        "values": [[float(v) for v in row] for row in matrix.values],
        "row_avg": [float(v) for v in row_avg],
        "col_avg": [float(v) for v in col_avg],
        "overall_avg": overall,
    }
    if aggregation:
        payload["aggregation"] = aggregation
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def read_grid_csv(path: str | Path) -> tuple[tuple[str, ...], np.ndarray]:
    """Parse a matrix CSV (trailing avg row/column tolerated and
    dropped)."""
    with open(path, "r", encoding="utf-8") as f:
        rows = [line.strip() for line in f if line.strip()]
    header = rows[0].split(",")
    labels = header[1:]
    if labels and labels[-1] == "avg":
        labels = labels[:-1]
    order = tuple(labels)
    values = []
    for line in rows[1:]:
        cells = line.split(",")
        if cells[0] == "avg":
            continue
        values.append([float(c) for c in cells[1 : 1 + len(order)]])
    return order, np.asarray(values, dtype=float)


def emit_ranking(
    values: Mapping[str, float],
    label: str,
    path: str | Path,
    ndigits: int = 2,
) -> None:
    """Descending ranking table; rank 1 is the maximum."""
    lines = [f"rank,system,{label}"]
    for rank, system in enumerate(rank_systems(values), start=1):
        lines.append(f"{rank},{system},{fmt(values[system], ndigits)}")
    _write_text(path, "\n".join(lines) + "\n")


def _diverging_color(value: float, extent: float) -> str:
    """Positive cells grey, negative cells red, zero neutral white."""
    if extent <= 0 or value == 0:
        return "#ffffff"
    strength = min(1.0, abs(value) / extent)
    fade = int(round(255 - 155 * strength))
    if value > 0:
        return f"#{fade:02x}{fade:02x}{fade:02x}"
    return f"#ff{fade:02x}{fade:02x}"


def emit_heatmap(
    grid,
    row_labels: Sequence[str],
    col_labels: Sequence[str],
    path: str | Path,
    title: str = "",
    ndigits: int = 2,
) -> None:
    """Render a signed grid as an SVG heatmap, one rect and one value
    label per cell, diverging colors anchored at zero."""
    values = np.asarray(grid, dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("heatmap cells must be finite")
    n_rows, n_cols = values.shape
    cell_w, cell_h = 72, 36
    pad_l, pad_t, pad_r, pad_b = 110, 56, 16, 40
    width = pad_l + n_cols * cell_w + pad_r
    height = pad_t + n_rows * cell_h + pad_b
    extent = float(np.max(np.abs(values))) if values.size else 0.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<style>.lbl{font:12px sans-serif;fill:#333}"
        ".ttl{font:13px sans-serif;font-weight:600}"
        ".val{font:11px monospace;fill:#111}</style>",
    ]
    if title:
        parts.append(f'<text class="ttl" x="{pad_l}" y="20">{title}</text>')
    for j, label in enumerate(col_labels):
        x = pad_l + j * cell_w + cell_w // 2
        parts.append(
            f'<text class="lbl" x="{x}" y="{pad_t - 10}" text-anchor="middle">{label}</text>'
        )
    for i, label in enumerate(row_labels):
        y = pad_t + i * cell_h + cell_h // 2 + 4
        parts.append(
            f'<text class="lbl" x="{pad_l - 8}" y="{y}" text-anchor="end">{label}</text>'
        )
    for i in range(n_rows):
        for j in range(n_cols):
            v = float(values[i, j])
            x = pad_l + j * cell_w
            y = pad_t + i * cell_h
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell_w}" height="{cell_h}" '
                f'fill="{_diverging_color(v, extent)}" stroke="#999"/>'
            )
            parts.append(
                f'<text class="val" x="{x + cell_w // 2}" y="{y + cell_h // 2 + 4}" '
                f'text-anchor="middle">{fmt(v, ndigits)}</text>'
            )
    parts.append(
        f'<text class="lbl" x="{pad_l + n_cols * cell_w // 2}" y="{height - 12}" '
        f'text-anchor="middle">test dataset</text>'
    )
    mid_y = pad_t + n_rows * cell_h // 2
    parts.append(
        f'<text class="lbl" x="16" y="{mid_y}" transform="rotate(-90,16,{mid_y})" '
        f'text-anchor="middle">train dataset</text>'
    )
    parts.append("</svg>")
    _write_text(path, "\n".join(parts) + "\n")


def write_diff_csv(
    grid,
    dataset_order: Sequence[str],
    path: str | Path,
    ndigits: int = 2,
) -> None:
    values = np.asarray(grid, dtype=float)
    lines = ["train\\test," + ",".join(dataset_order)]
    for i, train in enumerate(dataset_order):
        lines.append(train + "," + ",".join(fmt(v, ndigits) for v in values[i]))
    _write_text(path, "\n".join(lines) + "\n")


PROFILE_COLUMNS = ("coverage", "copy_length", "novelty", "fusion", "repetition")


def emit_profile(
    profiles: Sequence[BiasProfile],
    csv_path: str | Path,
    json_path: str | Path,
    novelty_n: int = 2,
    repetition_n: int = 3,
    ndigits: int = 4,
) -> None:
    """Radar-ready CSV (one row per dataset, fixed column order) plus a
    JSON document with the full per-n mappings and sample counts."""
    lines = ["dataset," + ",".join(PROFILE_COLUMNS)]
    for profile in profiles:
        row = [
            fmt(profile.coverage, ndigits),
            fmt(profile.copy_length, ndigits),
            fmt(profile.novelty[novelty_n], ndigits),
            fmt(profile.fusion_score, ndigits),
            fmt(profile.repetition[repetition_n], ndigits),
        ]
        lines.append(profile.dataset + "," + ",".join(row))
    _write_text(csv_path, "\n".join(lines) + "\n")

    payload = {
        profile.dataset: {
            "coverage": profile.coverage,
            "copy_length": profile.copy_length,
            "novelty": {str(n): v for n, v in profile.novelty.items() if not math.isnan(v)},
            "repetition": {str(n): v for n, v in profile.repetition.items() if not math.isnan(v)},
            "fusion_score": profile.fusion_score,
            "counts": profile.counts,
        }
        for profile in profiles
    }
    _write_text(json_path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def write_significance_csv(
    rows: Sequence[tuple[str, str, str, str, TestResult]],
    path: str | Path,
) -> None:
    """One row per comparison: (system a, system b, metric, measure,
    result)."""
    lines = ["system_a,system_b,metric,measure,n_effective,W,p_two_sided,method,significant"]
    for system_a, system_b, metric, measure, result in rows:
        lines.append(
            ",".join(
                [
                    system_a,
                    system_b,
                    metric,
                    measure,
                    str(result.n_effective),
                    fmt(result.statistic, 1),
                    repr(result.p_two_sided),
                    result.method,
                    "yes" if result.significant_at_alpha else "no",
                ]
            )
        )
    _write_text(path, "\n".join(lines) + "\n")
