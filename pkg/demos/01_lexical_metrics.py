"""Tokenization and ROUGE basics.

Run: python demos/01_lexical_metrics.py
"""

from crosseval import rouge_l, rouge_n, split_sentences, tokenize

candidate_text = "The cat sat on the mat."
reference_text = "The cat is on the mat."

# Tokens are lowercased alphanumeric runs; punctuation is dropped.
candidate = tokenize(candidate_text, stemming=True)
reference = tokenize(reference_text, stemming=True)
print("candidate tokens:", candidate.tokens)
print("reference tokens:", reference.tokens)

# N-gram overlap with clipped counts.
for n in (1, 2):
    score = rouge_n(candidate, reference, n)
    print(f"ROUGE-{n}: P={score.precision:.4f} R={score.recall:.4f} F1={score.f1:.4f}")

# Longest-common-subsequence variant on the flat token sequences.
score = rouge_l(candidate, reference, mode="flat")
print(f"ROUGE-L (flat): F1={score.f1:.4f}")

# Union mode works sentence by sentence: each reference sentence collects
# the positions matched by any candidate sentence.
cand_sents = [tokenize(s, stemming=True) for s in split_sentences("The cat sat. The dog ran.")]
ref_sents = [tokenize(s, stemming=True) for s in split_sentences("The cat sat and the dog ran.")]
score = rouge_l(cand_sents, ref_sents, mode="union")
print(f"ROUGE-L (union over sentences): R={score.recall:.4f}")

# Stemming makes morphological variants comparable.
print("stemmed:", tokenize("running runs easily", stemming=True).tokens)
print("raw:    ", tokenize("running runs easily", stemming=False).tokens)
