"""Corpus and system-output loading, tokenization, sentence splitting.

Input files are JSON-lines, one record per line:

  corpus:  {"id", "document", "reference",
            optional "document_sents", "reference_sents"}
  outputs: {"id", "system", "train_dataset", "test_dataset", "summary",
            optional "summary_sents"}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

from .stemmer import stem


class CorpusError(ValueError):
    """Malformed or inconsistent corpus/output/verdict data."""


@dataclass(frozen=True)
class TokenSeq:
    """Tokens plus the offset of each token in the source text."""

    tokens: tuple[str, ...]
    offsets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]


def tokenize(text: str, stemming: bool = False) -> TokenSeq:
    """Split text into lowercased alphanumeric runs.

    Case folding happens first, then maximal alphanumeric runs are taken;
    punctuation is discarded. With ``stemming`` on, Porter stemming is
    applied to all-ASCII alphabetic tokens only. Deterministic for fixed
    input and options.
    """
    tokens: list[str] = []
    offsets: list[int] = []
    current: list[str] = []
    start = -1
    for i, raw in enumerate(text):
        for ch in raw.casefold():
            if ch.isalnum():
                if not current:
                    start = i
                current.append(ch)
            elif current:
                tokens.append("".join(current))
                offsets.append(start)
                current = []
    if current:
        tokens.append("".join(current))
        offsets.append(start)
    if stemming:
        tokens = [
            stem(t) if t.isascii() and t.isalpha() else t for t in tokens
        ]
    return TokenSeq(tuple(tokens), tuple(offsets))


def split_sentences(text: str) -> list[str]:
    """Split text at runs of ``.?!`` followed by whitespace.

    A naive splitter: records carrying pre-split sentence lists always
    take precedence over it.
    """
    sentences: list[str] = []
    begin = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in ".?!":
            while i < n and text[i] in ".?!":
                i += 1
            if i >= n or text[i].isspace():
                piece = text[begin:i].strip()
                if piece:
                    sentences.append(piece)
                while i < n and text[i].isspace():
                    i += 1
                begin = i
                continue
        else:
            i += 1
    tail = text[begin:].strip()
    if tail:
        sentences.append(tail)
    return sentences


@dataclass(frozen=True)
class Sample:
    """One document/reference pair within a dataset."""

    id: str
    document: str
    reference: str
    document_sents: tuple[str, ...] | None = None
    reference_sents: tuple[str, ...] | None = None


@dataclass
class Corpus:
    dataset: str
    samples: list[Sample] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[Sample]:
        return iter(self.samples)

    def by_id(self) -> dict[str, Sample]:
        return {s.id: s for s in self.samples}


@dataclass(frozen=True)
class SystemOutput:
    """A generated summary keyed by (system, train, test, sample id)."""

    sample_id: str
    system: str
    train_dataset: str
    test_dataset: str
    summary: str
    summary_sents: tuple[str, ...] | None = None

    @property
    def key(self) -> tuple[str, str, str, str]:
        return (self.system, self.train_dataset, self.test_dataset, self.sample_id)


def sentences_of(text: str, presplit: Sequence[str] | None) -> list[str]:
    """Pre-split sentences when available, otherwise the naive splitter."""
    if presplit is not None:
        return list(presplit)
    return split_sentences(text)


def _read_jsonl(path: str | Path) -> Iterator[tuple[int, dict]]:
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}: line {lineno}: malformed JSON ({exc.msg})")
            if not isinstance(record, dict):
                raise CorpusError(f"{path}: line {lineno}: record is not an object")
            yield lineno, record


def _require(record: dict, name: str, path, lineno: int) -> str:
    value = record.get(name)
    if not isinstance(value, str) or not value:
        raise CorpusError(f"{path}: line {lineno}: missing or empty field '{name}'")
    return value


def _optional_sents(record: dict, name: str, path, lineno: int) -> tuple[str, ...] | None:
    value = record.get(name)
    if value is None:
        return None
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise CorpusError(f"{path}: line {lineno}: field '{name}' must be a list of strings")
    return tuple(value)


def load_corpus(path: str | Path, dataset: str) -> Corpus:
    """Load a JSON-lines corpus file, preserving file order.

    Raises CorpusError on malformed lines (with line number), duplicate
    sample ids, samples that tokenize to nothing, or an empty file.
    """
    if not dataset:
        raise CorpusError("dataset name must be nonempty")
    corpus = Corpus(dataset=dataset)
    seen: set[str] = set()
    for lineno, record in _read_jsonl(path):
        sample_id = _require(record, "id", path, lineno)
        document = _require(record, "document", path, lineno)
        reference = _require(record, "reference", path, lineno)
        if sample_id in seen:
            raise CorpusError(f"{path}: line {lineno}: duplicate sample id '{sample_id}'")
        seen.add(sample_id)
        if len(tokenize(document)) == 0:
            raise CorpusError(f"{path}: line {lineno}: document of '{sample_id}' has no tokens")
        if len(tokenize(reference)) == 0:
            raise CorpusError(f"{path}: line {lineno}: reference of '{sample_id}' has no tokens")
        corpus.samples.append(
            Sample(
                id=sample_id,
                document=document,
                reference=reference,
                document_sents=_optional_sents(record, "document_sents", path, lineno),
                reference_sents=_optional_sents(record, "reference_sents", path, lineno),
            )
        )
    if not corpus.samples:
        raise CorpusError(f"{path}: empty corpus")
    return corpus


def load_outputs(path: str | Path) -> list[SystemOutput]:
    """Load system outputs; (system, train, test, sample id) must be unique."""
    outputs: list[SystemOutput] = []
    seen: set[tuple[str, str, str, str]] = set()
    for lineno, record in _read_jsonl(path):
        output = SystemOutput(
            sample_id=_require(record, "id", path, lineno),
            system=_require(record, "system", path, lineno),
            train_dataset=_require(record, "train_dataset", path, lineno),
            test_dataset=_require(record, "test_dataset", path, lineno),
            summary=_require(record, "summary", path, lineno),
            summary_sents=_optional_sents(record, "summary_sents", path, lineno),
        )
        if output.key in seen:
            raise CorpusError(
                f"{path}: line {lineno}: duplicate output "
                f"{output.system}/{output.train_dataset}/{output.test_dataset}/{output.sample_id}"
            )
        seen.add(output.key)
        outputs.append(output)
    return outputs


@dataclass(frozen=True)
class AlignmentGap:
    system: str
    train_dataset: str
    test_dataset: str
    missing_samples: tuple[str, ...]
    orphan_outputs: tuple[str, ...]


@dataclass
class AlignmentReport:
    gaps: list[AlignmentGap] = field(default_factory=list)

    @property
    def is_clean(self) -> bool:
        return not self.gaps

    def describe(self) -> str:
        lines = []
        for gap in self.gaps:
            scope = f"{gap.system} {gap.train_dataset}->{gap.test_dataset}"
            if gap.missing_samples:
                lines.append(f"{scope}: no output for {', '.join(gap.missing_samples)}")
            if gap.orphan_outputs:
                lines.append(f"{scope}: unknown sample id {', '.join(gap.orphan_outputs)}")
        return "\n".join(lines)


def validate_alignment(
    corpora: Mapping[str, Corpus], outputs: Iterable[SystemOutput]
) -> AlignmentReport:
    """Report, per (system, train, test) slice, corpus samples lacking an
    output and outputs whose sample id does not resolve in the test corpus.

    The report is empty iff every slice is a bijection onto its corpus ids.
    """
    slices: dict[tuple[str, str, str], list[SystemOutput]] = {}
    for output in outputs:
        slices.setdefault(
            (output.system, output.train_dataset, output.test_dataset), []
        ).append(output)

    report = AlignmentReport()
    for (system, train, test), group in sorted(slices.items()):
        corpus = corpora.get(test)
        corpus_ids = set(corpus.by_id()) if corpus is not None else set()
        output_ids = {o.sample_id for o in group}
        missing = tuple(sorted(corpus_ids - output_ids))
        orphans = tuple(sorted(output_ids - corpus_ids))
        if missing or orphans:
            report.gaps.append(
                AlignmentGap(system, train, test, missing, orphans)
            )
    return report
