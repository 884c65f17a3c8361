"""ROUGE-1/2/L precision, recall and F1 between candidate and reference."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corpus import Corpus, SystemOutput, sentences_of, tokenize


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float


def _score(overlap: float, cand_total: int, ref_total: int) -> RougeScore:
    p = overlap / cand_total if cand_total else 0.0
    r = overlap / ref_total if ref_total else 0.0
    f1 = 0.0 if p + r == 0 else 2 * p * r / (p + r)
    return RougeScore(p, r, f1)


def ngrams(tokens: Sequence[str], n: int) -> Counter:
    """All contiguous n-grams with multiplicity; empty if len(tokens) < n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int) -> RougeScore:
    """N-gram overlap with clipped counts (each reference n-gram matches at
    most its own multiplicity)."""
    cand_counts = ngrams(candidate, n)
    ref_counts = ngrams(reference, n)
    overlap = sum(min(c, ref_counts[g]) for g, c in cand_counts.items())
    return _score(overlap, sum(cand_counts.values()), sum(ref_counts.values()))


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest common subsequence length, O(min(|a|,|b|)) memory."""
    if len(b) > len(a):
        a, b = b, a
    if not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        row = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                row.append(prev[j - 1] + 1)
            else:
                row.append(max(prev[j], row[j - 1]))
        prev = row
    return prev[-1]


def _lcs_ref_positions(reference: Sequence[str], candidate: Sequence[str]) -> set[int]:
    """Reference token positions matched by one LCS backtrace.

    Ties in the DP table prefer stepping along the reference, which fixes
    a deterministic set of matched positions.
    """
    m, n = len(reference), len(candidate)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if reference[i - 1] == candidate[j - 1]:
                dp[i][j] = dp[i - 1][j - 1] + 1
            else:
                dp[i][j] = max(dp[i - 1][j], dp[i][j - 1])
    matched: set[int] = set()
    i, j = m, n
    while i > 0 and j > 0:
        if reference[i - 1] == candidate[j - 1]:
            matched.add(i - 1)
            i -= 1
            j -= 1
        elif dp[i - 1][j] >= dp[i][j - 1]:
            i -= 1
        else:
            j -= 1
    return matched


def rouge_l(
    candidate: Sequence, reference: Sequence, mode: str = "flat"
) -> RougeScore:
    """Longest-common-subsequence ROUGE.

    flat mode: candidate/reference are token sequences; hits = LCS length.
    union mode: candidate/reference are sequences of sentence token
    sequences; per reference sentence the LCS-matched positions are
    unioned over candidate sentences, then summed.
    """
    if mode == "flat":
        hits = lcs_length(candidate, reference)
        return _score(hits, len(candidate), len(reference))
    if mode == "union":
        cand_total = sum(len(s) for s in candidate)
        ref_total = sum(len(s) for s in reference)
        hits = 0
        for ref_sent in reference:
            matched: set[int] = set()
            for cand_sent in candidate:
                matched |= _lcs_ref_positions(ref_sent, cand_sent)
            hits += len(matched)
        return _score(hits, cand_total, ref_total)
    raise ValueError(f"unknown rouge_l mode '{mode}'")


ROUGE_METRICS = ("rouge1", "rouge2", "rougeL")


class CorpusLookupError(KeyError):
    """An output references a sample id absent from its test corpus."""


def score_pair(
    summary: str,
    reference: str,
    summary_sents: Sequence[str] | None,
    reference_sents: Sequence[str] | None,
    stemming: bool = True,
    rouge_l_mode: str = "auto",
) -> dict[str, RougeScore]:
    """ROUGE-1/2/L for one candidate/reference text pair.

    rouge_l_mode "auto" uses union scoring when both sides carry pre-split
    sentences and flat scoring otherwise; "union" forces union scoring
    with the naive splitter as fallback.
    """
    cand = tokenize(summary, stemming=stemming)
    ref = tokenize(reference, stemming=stemming)
    scores = {
        "rouge1": rouge_n(cand, ref, 1),
        "rouge2": rouge_n(cand, ref, 2),
    }
    mode = rouge_l_mode
    if mode == "auto":
        mode = "union" if (summary_sents is not None and reference_sents is not None) else "flat"
    if mode == "flat":
        scores["rougeL"] = rouge_l(cand, ref, mode="flat")
    else:
        cand_sents = [
            tokenize(s, stemming=stemming)
            for s in sentences_of(summary, summary_sents)
        ]
        ref_sents = [
            tokenize(s, stemming=stemming)
            for s in sentences_of(reference, reference_sents)
        ]
        scores["rougeL"] = rouge_l(cand_sents, ref_sents, mode="union")
    return scores


def _score_task(task) -> dict[str, RougeScore]:
    return score_pair(*task[:4], stemming=task[4], rouge_l_mode=task[5])


def score_corpus(
    outputs: Sequence[SystemOutput],
    corpora: Mapping[str, Corpus],
    stemming: bool = True,
    rouge_l_mode: str = "auto",
    metrics: Sequence[str] = ROUGE_METRICS,
    workers: int = 1,
) -> list[tuple[SystemOutput, str, float]]:
    """Per-sample F1 for the requested ROUGE metrics.

    Returns (output, metric, f1) triples in input order; the corpus-level
    value of a cell is the arithmetic mean of these per-sample F1 scores.
    Scoring is pure per sample, so ``workers > 1`` fans out over a process
    pool; results are still aggregated in input order.
    """
    for metric in metrics:
        if metric not in ROUGE_METRICS:
            raise ValueError(f"unknown ROUGE metric '{metric}'")
    indexes = {name: corpus.by_id() for name, corpus in corpora.items()}
    tasks = []
    for output in outputs:
        index = indexes.get(output.test_dataset)
        if index is None or output.sample_id not in index:
            raise CorpusLookupError(
                f"sample '{output.sample_id}' not found in corpus '{output.test_dataset}'"
            )
        sample = index[output.sample_id]
        tasks.append((
            output.summary, sample.reference, output.summary_sents,
            sample.reference_sents, stemming, rouge_l_mode,
        ))
    if workers > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            all_scores = list(pool.map(_score_task, tasks, chunksize=64))
    else:
        all_scores = [_score_task(task) for task in tasks]
    results: list[tuple[SystemOutput, str, float]] = []
    for output, scores in zip(outputs, all_scores):
        for metric in metrics:
            results.append((output, metric, scores[metric].f1))
    return results
