"""Append-only score store: per-sample records persisted as JSON-lines,
with cached cell aggregates so reports never recompute metrics.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .crossgrid import CellMissingError

KNOWN_METRICS = frozenset(
    {"rouge1", "rouge2", "rougeL", "coverage", "copy_length", "novelty",
     "repetition", "fusion", "factuality"}
)


@dataclass(frozen=True)
class ScoreRecord:
    """One metric value for one sample under one (system, train, test)
    context, tagged with the fingerprint of the config that produced it."""

    sample_id: str
    system: str
    train_dataset: str
    test_dataset: str
    metric: str
    value: float
    fingerprint: str = ""

    @property
    def key(self) -> tuple:
        return (
            self.sample_id, self.system, self.train_dataset,
            self.test_dataset, self.metric, self.fingerprint,
        )

    @property
    def cell(self) -> tuple:
        return (
            self.system, self.train_dataset, self.test_dataset,
            self.metric, self.fingerprint,
        )


def config_fingerprint(metric: str, options: Mapping) -> str:
    """Stable short hash of the options that affect a metric's values."""
    payload = json.dumps(
        {"metric": metric, "options": options}, sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:12]


class ScoreStore:
    """Single-writer record store over one JSON-lines file."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._records: dict[tuple, ScoreRecord] = {}
        self._by_cell: dict[tuple, list[float]] = {}
        self._aggregates: dict[tuple, float] = {}
        if self.path is not None and self.path.exists():
            with open(self.path, "r", encoding="utf-8") as f:
                for line in f:
                    if line.strip():
                        self._index(ScoreRecord(**json.loads(line)))

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[ScoreRecord]:
        return iter(self._records.values())

    def _index(self, record: ScoreRecord) -> None:
        if record.key in self._records:
            raise ValueError(f"duplicate score record {record.key}")
        if not math.isfinite(record.value):
            raise ValueError(f"non-finite value for {record.key}")
        if record.metric not in KNOWN_METRICS:
            raise ValueError(f"unknown metric '{record.metric}'")
        self._records[record.key] = record
        self._by_cell.setdefault(record.cell, []).append(record.value)
        self._aggregates.pop(record.cell, None)

    def put_records(self, records: Iterable[ScoreRecord]) -> int:
        """Add records (rejecting duplicate keys) and persist them."""
        added = []
        for record in records:
            self._index(record)
            added.append(record)
        if self.path is not None and added:
            with open(self.path, "a", encoding="utf-8") as f:
                for record in added:
                    f.write(json.dumps(asdict(record), sort_keys=True) + "\n")
        return len(added)

    def has_cell(
        self, system: str, train: str, test: str, metric: str, fingerprint: str = ""
    ) -> bool:
        return (system, train, test, metric, fingerprint) in self._by_cell

    def get_cell(
        self, system: str, train: str, test: str, metric: str, fingerprint: str = ""
    ) -> float:
        """Cached mean of the cell's per-sample values.

        A cell recorded under a different fingerprint is a miss: the
        caller must rescore. Raises CellMissingError for absent cells
        (distinct from a zero aggregate).
        """
        cell = (system, train, test, metric, fingerprint)
        if cell in self._aggregates:
            return self._aggregates[cell]
        values = self._by_cell.get(cell)
        if not values:
            raise CellMissingError(
                f"no records for {system}/{train}->{test}/{metric}"
                + (f" (fingerprint {fingerprint})" if fingerprint else "")
            )
        # fsum is correctly rounded, so the aggregate does not depend on
        # record insertion order
        aggregate = math.fsum(values) / len(values)
        self._aggregates[cell] = aggregate
        return aggregate

    def systems(self) -> list[str]:
        return sorted({r.system for r in self._records.values()})
