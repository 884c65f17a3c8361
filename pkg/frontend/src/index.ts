/**
 * Bound functions of the summarization-evaluation toolkit.
 *
 * Names and contracts mirror the toolkit's own API one to one (hence the
 * snake_case), all values are plain JSON data, and results are
 * bit-identical to calling the toolkit directly. Errors raised by the
 * toolkit surface as ToolkitError with the original message.
 */

import { BridgeOptions, callToolkit } from "./bridge.js";

export { BridgeOptions, ToolkitError } from "./bridge.js";

export interface RougeScore {
  precision: number;
  recall: number;
  f1: number;
}

export interface Fragment {
  start: number;
  length: number;
  doc_start: number;
}

export interface FusionResult {
  score: number | null;
  supports: number[];
}

export interface WilcoxonResult {
  n_effective: number;
  statistic: number;
  p_two_sided: number;
  method: "exact" | "normal-approx";
  significant_at_alpha: boolean;
  alpha: number;
}

export interface ScoreRecordRow {
  sample_id: string;
  system: string;
  train_dataset: string;
  test_dataset: string;
  metric: string;
  value: number;
}

/** N-gram overlap F1 between token sequences (clipped counts). */
export function rouge_n(
  candidate: string[],
  reference: string[],
  n: number,
  options?: BridgeOptions,
): RougeScore {
  return callToolkit("rouge_n", { candidate, reference, n }, options);
}

/**
 * LCS-based score. Flat mode takes token sequences; union mode takes
 * sequences of sentence token sequences.
 */
export function rouge_l(
  candidate: string[] | string[][],
  reference: string[] | string[][],
  mode: "flat" | "union" = "flat",
  options?: BridgeOptions,
): RougeScore {
  return callToolkit("rouge_l", { candidate, reference, mode }, options);
}

/** Greedy verbatim-copy fragments of the summary within the document. */
export function extract_fragments(
  summary: string[],
  document: string[],
  options?: BridgeOptions,
): Fragment[] {
  return callToolkit("extract_fragments", { summary, document }, options);
}

/** Fraction of summary n-grams absent from the document (null if undefined). */
export function novelty(
  summary: string[],
  document: string[],
  n: number,
  options?: BridgeOptions,
): number | null {
  return callToolkit("novelty", { summary, document, n }, options);
}

/** Fraction of repeated n-gram tokens in the summary (null if undefined). */
export function repetition(
  summary: string[],
  n: number,
  options?: BridgeOptions,
): number | null {
  return callToolkit("repetition", { summary, n }, options);
}

/** Sentence fusion score plus per-sentence support counts. */
export function fusion_score(
  summary_sents: string[][],
  document_sents: string[][],
  max_support = 3,
  gain_threshold = 0.02,
  options?: BridgeOptions,
): FusionResult {
  return callToolkit(
    "fusion_score",
    { summary_sents, document_sents, max_support, gain_threshold },
    options,
  );
}

/** Mean of all cells of a cross-dataset grid. */
export function stiffness(values: number[][], options?: BridgeOptions): number {
  return callToolkit("stiffness", { values }, options);
}

/** Mean of the diagonal-normalized cells (percent; can exceed 100). */
export function stableness(values: number[][], options?: BridgeOptions): number {
  return callToolkit("stableness", { values }, options);
}

/** Divide each cell by its column diagonal, x100. */
export function normalize(values: number[][], options?: BridgeOptions): number[][] {
  return callToolkit("normalize", { values }, options);
}

/** Mean of the diagonal (in-dataset) cells. */
export function in_dataset_mean(values: number[][], options?: BridgeOptions): number {
  return callToolkit("in_dataset_mean", { values }, options);
}

/** Two-sided Wilcoxon signed-rank test on paired samples. */
export function wilcoxon_signed_rank(
  x: number[],
  y: number[],
  alpha = 0.05,
  method: "auto" | "exact" | "normal-approx" = "auto",
  options?: BridgeOptions,
): WilcoxonResult {
  return callToolkit("wilcoxon_signed_rank", { x, y, alpha, method }, options);
}

export interface ScoreCorpusOptions extends BridgeOptions {
  stemming?: boolean;
  rouge_l_mode?: "auto" | "union" | "flat";
  metrics?: string[];
}

/**
 * File-level scoring: corpora is a dataset-name -> JSONL-path map,
 * outputs a JSONL path; returns one record per (output, metric).
 */
export function score_corpus(
  corpora: Record<string, string>,
  outputs: string,
  options: ScoreCorpusOptions = {},
): ScoreRecordRow[] {
  const { python, ...rest } = options;
  return callToolkit("score_corpus", { corpora, outputs, ...rest }, { python });
}
