"""Ingestion and aggregation of per-sentence factual-consistency verdicts.

The classifier itself is external; any checker that emits one boolean per
summary sentence can feed this module. Verdict files are JSON-lines with
fields: id, system, train_dataset, test_dataset, sentence_index,
consistent.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus import CorpusError, SystemOutput, _read_jsonl, _require, sentences_of


@dataclass(frozen=True)
class SentenceVerdict:
    sample_id: str
    system: str
    train_dataset: str
    test_dataset: str
    sentence_index: int
    consistent: bool

    @property
    def output_key(self) -> tuple[str, str, str, str]:
        return (self.system, self.train_dataset, self.test_dataset, self.sample_id)


def load_verdicts(
    path: str | Path, outputs: Sequence[SystemOutput] | None = None
) -> list[SentenceVerdict]:
    """Load sentence verdicts; duplicates are rejected.

    When outputs are supplied, each verdict's sentence_index is checked
    against the sentence count of the matching output.
    """
    sentence_counts: dict[tuple[str, str, str, str], int] | None = None
    if outputs is not None:
        sentence_counts = {
            o.key: len(sentences_of(o.summary, o.summary_sents)) for o in outputs
        }
    verdicts: list[SentenceVerdict] = []
    seen: set[tuple] = set()
    for lineno, record in _read_jsonl(path):
        index = record.get("sentence_index")
        if not isinstance(index, int) or index < 0:
            raise CorpusError(
                f"{path}: line {lineno}: 'sentence_index' must be a nonnegative integer"
            )
        consistent = record.get("consistent")
        if not isinstance(consistent, bool):
            raise CorpusError(f"{path}: line {lineno}: 'consistent' must be a boolean")
        verdict = SentenceVerdict(
            sample_id=_require(record, "id", path, lineno),
            system=_require(record, "system", path, lineno),
            train_dataset=_require(record, "train_dataset", path, lineno),
            test_dataset=_require(record, "test_dataset", path, lineno),
            sentence_index=index,
            consistent=consistent,
        )
        key = verdict.output_key + (verdict.sentence_index,)
        if key in seen:
            raise CorpusError(
                f"{path}: line {lineno}: duplicate verdict for sentence "
                f"{verdict.sentence_index} of {verdict.system}/{verdict.train_dataset}/"
                f"{verdict.test_dataset}/{verdict.sample_id}"
            )
        seen.add(key)
        if sentence_counts is not None:
            count = sentence_counts.get(verdict.output_key)
            if count is None:
                raise CorpusError(
                    f"{path}: line {lineno}: verdict refers to unknown output "
                    f"{verdict.system}/{verdict.train_dataset}/{verdict.test_dataset}/"
                    f"{verdict.sample_id}"
                )
            if verdict.sentence_index >= count:
                raise CorpusError(
                    f"{path}: line {lineno}: sentence_index {verdict.sentence_index} "
                    f"out of range for '{verdict.sample_id}' ({count} sentences)"
                )
        verdicts.append(verdict)
    if not verdicts:
        warnings.warn(f"{path}: empty verdict file")
    return verdicts


def factuality_score(verdicts: Iterable[SentenceVerdict]) -> float:
    """Pooled over sentences: consistent count / total count."""
    total = 0
    consistent = 0
    for verdict in verdicts:
        total += 1
        consistent += verdict.consistent
    if total == 0:
        raise ValueError("factuality score undefined without verdicts")
    return consistent / total


def macro_factuality_score(verdicts: Iterable[SentenceVerdict]) -> float:
    """Unweighted mean of per-sample consistency proportions.

    Emitted alongside the pooled score; the two differ when summary
    sentence counts vary across samples.
    """
    per_sample: dict[tuple, list[int]] = {}
    for verdict in verdicts:
        per_sample.setdefault(verdict.output_key, []).append(int(verdict.consistent))
    if not per_sample:
        raise ValueError("factuality score undefined without verdicts")
    proportions = [sum(v) / len(v) for v in per_sample.values()]
    return sum(proportions) / len(proportions)


def group_by_cell(
    verdicts: Iterable[SentenceVerdict],
) -> Mapping[tuple[str, str, str], list[SentenceVerdict]]:
    """Verdicts grouped by (system, train, test)."""
    groups: dict[tuple[str, str, str], list[SentenceVerdict]] = {}
    for verdict in verdicts:
        groups.setdefault(
            (verdict.system, verdict.train_dataset, verdict.test_dataset), []
        ).append(verdict)
    return groups
