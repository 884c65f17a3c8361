"""Cross-dataset evaluation toolkit for text summarization.

Lexical metrics (ROUGE-1/2/L), dataset-bias measures (coverage, copy
length, novelty, repetition, sentence fusion), factuality aggregation,
cross-dataset score matrices with the stiffness/stableness holistic
measures, and pairwise Wilcoxon signed-rank significance tests.
"""

from .bias import (
    BiasProfile,
    Fragment,
    copy_length,
    coverage,
    extract_fragments,
    fusion_score,
    novelty,
    profile_dataset,
    repetition,
)
from .config import RunConfig, load_config
from .corpus import (
    AlignmentReport,
    Corpus,
    CorpusError,
    Sample,
    SystemOutput,
    TokenSeq,
    load_corpus,
    load_outputs,
    split_sentences,
    tokenize,
    validate_alignment,
)
from .crossgrid import (
    CellMissingError,
    CrossMatrix,
    HolisticScores,
    build_matrix,
    diff,
    holistic_scores,
    in_dataset_mean,
    normalize,
    normalized_matrix,
    rank_systems,
    stableness,
    stiffness,
)
from .factuality import (
    SentenceVerdict,
    factuality_score,
    load_verdicts,
    macro_factuality_score,
)
from .rouge import (
    RougeScore,
    lcs_length,
    ngrams,
    rouge_l,
    rouge_n,
    score_corpus,
    score_pair,
)
from .stats import TestResult, compare_systems, wilcoxon_signed_rank
from .stemmer import stem
from .store import ScoreRecord, ScoreStore, config_fingerprint

__version__ = "0.1.0"

__all__ = [
    "AlignmentReport", "BiasProfile", "CellMissingError", "Corpus",
    "CorpusError", "CrossMatrix", "Fragment", "HolisticScores", "RougeScore",
    "RunConfig", "Sample", "ScoreRecord", "ScoreStore", "SentenceVerdict",
    "SystemOutput", "TestResult", "TokenSeq", "build_matrix",
    "compare_systems", "config_fingerprint", "copy_length", "coverage",
    "diff", "extract_fragments", "factuality_score", "fusion_score",
    "holistic_scores", "in_dataset_mean", "lcs_length", "load_config",
    "load_corpus", "load_outputs", "load_verdicts", "macro_factuality_score",
    "ngrams", "normalize", "normalized_matrix", "novelty", "profile_dataset",
    "rank_systems", "repetition", "rouge_l", "rouge_n", "score_corpus",
    "score_pair", "split_sentences", "stableness", "stem", "stiffness",
    "tokenize", "validate_alignment",
]
