"""Dataset-bias measures: coverage, copy length, novelty, repetition and
sentence fusion, per sample and aggregated per dataset.

All measures are computed on raw (unstemmed) tokens, between a summary
(the reference, when profiling a dataset) and its source document.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .corpus import Corpus, sentences_of, tokenize

NGRAM_RANGE = (1, 2, 3, 4)


@dataclass(frozen=True)
class Fragment:
    """A maximal copied run: summary tokens [start, start+length) appear
    verbatim in the document at doc_start."""

    start: int
    length: int
    doc_start: int


def extract_fragments(
    summary: Sequence[str], document: Sequence[str]
) -> list[Fragment]:
    """Greedy left-to-right extraction of copied segments.

    At each summary position the longest matching document substring is
    taken (ties broken by earliest document position); on a match the
    cursor advances past it, otherwise by one token.
    """
    positions: dict[str, list[int]] = {}
    for j, token in enumerate(document):
        positions.setdefault(token, []).append(j)

    fragments: list[Fragment] = []
    i = 0
    while i < len(summary):
        best_len = 0
        best_doc = -1
        for j in positions.get(summary[i], ()):
            length = 0
            while (
                i + length < len(summary)
                and j + length < len(document)
                and summary[i + length] == document[j + length]
            ):
                length += 1
            if length > best_len:
                best_len = length
                best_doc = j
        if best_len >= 1:
            fragments.append(Fragment(i, best_len, best_doc))
            i += best_len
        else:
            i += 1
    return fragments


def coverage(fragments: Sequence[Fragment], summary_len: int) -> float:
    """Fraction of summary tokens inside copied fragments."""
    if summary_len < 1:
        raise ValueError("coverage undefined for empty summary")
    return sum(f.length for f in fragments) / summary_len


def copy_length(fragments: Sequence[Fragment]) -> float:
    """Mean copied-fragment length in tokens, 0 when nothing is copied."""
    if not fragments:
        return 0.0
    return sum(f.length for f in fragments) / len(fragments)


def novelty(
    summary: Sequence[str], document: Sequence[str], n: int
) -> float | None:
    """Fraction of summary n-grams (with multiplicity) whose type never
    occurs in the document; None when the summary has no n-grams."""
    if n not in NGRAM_RANGE:
        raise ValueError("n must be in 1..4")
    total = len(summary) - n + 1
    if total <= 0:
        return None
    doc_grams = {tuple(document[j : j + n]) for j in range(len(document) - n + 1)}
    novel = sum(
        1 for i in range(total) if tuple(summary[i : i + n]) not in doc_grams
    )
    return novel / total


def repetition(summary: Sequence[str], n: int) -> float | None:
    """1 - distinct/total over the summary's n-grams; None when the
    summary has no n-grams."""
    if n not in NGRAM_RANGE:
        raise ValueError("n must be in 1..4")
    total = len(summary) - n + 1
    if total <= 0:
        return None
    distinct = len({tuple(summary[i : i + n]) for i in range(total)})
    return 1.0 - distinct / total


def _recall_against(ref_counts: Counter, ref_total: int, pool: Counter) -> float:
    overlap = sum(min(c, pool[g]) for g, c in ref_counts.items())
    return overlap / ref_total


def fusion_score(
    summary_sents: Sequence[Sequence[str]],
    document_sents: Sequence[Sequence[str]],
    max_support: int = 3,
    gain_threshold: float = 0.02,
) -> tuple[float | None, list[int]]:
    """Fraction of summary sentences fused from two or three document
    sentences, plus the per-sentence support counts.

    Support for a summary sentence is found greedily: document sentences
    are added (up to max_support) while each addition improves the
    unigram recall of the summary sentence against the union of selected
    sentences by at least gain_threshold. The first pick is always taken.
    Summary sentences with no tokens are skipped.
    """
    supports: list[int] = []
    fused = 0
    counted = 0
    doc_counters = [Counter(s) for s in document_sents]
    for sent in summary_sents:
        ref_counts = Counter(sent)
        ref_total = len(sent)
        if ref_total == 0:
            supports.append(0)
            continue
        counted += 1
        pool: Counter = Counter()
        recall = 0.0
        chosen: set[int] = set()
        while len(chosen) < max_support and len(chosen) < len(doc_counters):
            best_gain = -1.0
            best_idx = -1
            best_pool = None
            for idx, counts in enumerate(doc_counters):
                if idx in chosen:
                    continue
                candidate_pool = pool + counts
                gain = _recall_against(ref_counts, ref_total, candidate_pool) - recall
                if gain > best_gain:
                    best_gain = gain
                    best_idx = idx
                    best_pool = candidate_pool
            if chosen and best_gain < gain_threshold:
                break
            chosen.add(best_idx)
            pool = best_pool
            recall += best_gain
        support = len(chosen)
        supports.append(support)
        if 2 <= support <= 3:
            fused += 1
    if counted == 0:
        return None, supports
    return fused / counted, supports


@dataclass
class BiasProfile:
    """Per-dataset means of the five bias measures, with the number of
    samples each mean is taken over (undefined samples are excluded)."""

    dataset: str
    coverage: float
    copy_length: float
    novelty: dict[int, float]
    repetition: dict[int, float]
    fusion_score: float
    counts: dict[str, int] = field(default_factory=dict)


def _mean(values: list[float]) -> float:
    return math.fsum(values) / len(values) if values else float("nan")


def _truncate_sents(sents: list, limit: int) -> list:
    """Trim a list of token sequences to the first ``limit`` tokens."""
    kept = []
    remaining = limit
    for sent in sents:
        if remaining <= 0:
            break
        tokens = list(sent)[:remaining]
        kept.append(tokens)
        remaining -= len(tokens)
    return kept


def profile_dataset(
    corpus: Corpus,
    max_support: int = 3,
    gain_threshold: float = 0.02,
    truncate_doc_tokens: int | None = None,
) -> BiasProfile:
    """Bias measures between each sample's reference and document,
    averaged over the samples where each measure is defined.

    ``truncate_doc_tokens`` limits each document to its first N tokens
    (summaries are never truncated); default is the full document.
    """
    if len(corpus) == 0:
        raise ValueError("empty corpus")
    cov_vals: list[float] = []
    clen_vals: list[float] = []
    nov_vals: dict[int, list[float]] = {n: [] for n in NGRAM_RANGE}
    rep_vals: dict[int, list[float]] = {n: [] for n in NGRAM_RANGE}
    fus_vals: list[float] = []
    for sample in corpus:
        doc: Sequence[str] = tokenize(sample.document)
        ref = tokenize(sample.reference)
        if truncate_doc_tokens is not None:
            doc = list(doc)[:truncate_doc_tokens]
        if len(ref) >= 1:
            fragments = extract_fragments(ref, doc)
            cov_vals.append(coverage(fragments, len(ref)))
            clen_vals.append(copy_length(fragments))
        for n in NGRAM_RANGE:
            nov = novelty(ref, doc, n)
            if nov is not None:
                nov_vals[n].append(nov)
            rep = repetition(ref, n)
            if rep is not None:
                rep_vals[n].append(rep)
        ref_sents = [
            tokenize(s) for s in sentences_of(sample.reference, sample.reference_sents)
        ]
        doc_sents = [
            tokenize(s) for s in sentences_of(sample.document, sample.document_sents)
        ]
        doc_sents = [s for s in doc_sents if len(s)]
        if truncate_doc_tokens is not None:
            doc_sents = _truncate_sents(doc_sents, truncate_doc_tokens)
        if ref_sents and doc_sents:
            score, _ = fusion_score(ref_sents, doc_sents, max_support, gain_threshold)
            if score is not None:
                fus_vals.append(score)
    counts = {
        "coverage": len(cov_vals),
        "copy_length": len(clen_vals),
        "fusion_score": len(fus_vals),
    }
    for n in NGRAM_RANGE:
        counts[f"novelty_{n}"] = len(nov_vals[n])
        counts[f"repetition_{n}"] = len(rep_vals[n])
    return BiasProfile(
        dataset=corpus.dataset,
        coverage=_mean(cov_vals),
        copy_length=_mean(clen_vals),
        novelty={n: _mean(v) for n, v in nov_vals.items()},
        repetition={n: _mean(v) for n, v in rep_vals.items()},
        fusion_score=_mean(fus_vals),
        counts=counts,
    )
