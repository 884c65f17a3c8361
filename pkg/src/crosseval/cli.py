"""Command-line surface: profile, score, matrix, compare, rank.

A `call` subcommand additionally exposes the pure metric functions as a
JSON-in/JSON-out bridge for scripting pipelines and language bindings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path

from . import bias, crossgrid, factuality, rouge, stats
from .config import RunConfig, load_config
from .corpus import Corpus, CorpusError, load_corpus, load_outputs, validate_alignment
from .report import (
    emit_heatmap,
    emit_profile,
    emit_ranking,
    fmt,
    read_grid_csv,
    write_diff_csv,
    write_matrix_csv,
    write_matrix_json,
    write_significance_csv,
)
from .store import ScoreRecord, ScoreStore

OUT_DIR_ENV = "CROSSEVAL_OUT"


def _config_from_args(args) -> RunConfig:
    config = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    for name in (
        "stemming", "novelty_n", "repetition_n", "fusion_delta",
        "fusion_max_support", "rouge_l_mode", "alpha", "truncate_doc_tokens",
    ):
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    if getattr(args, "datasets", None):
        config.datasets = list(args.datasets)
    out = getattr(args, "out", None) or os.environ.get(OUT_DIR_ENV) or config.out_dir
    config.out_dir = out
    return config


def _out_dir(config: RunConfig) -> Path:
    path = Path(config.out_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _parse_corpus_args(pairs: list[str]) -> dict[str, Corpus]:
    corpora: dict[str, Corpus] = {}
    for pair in pairs:
        if "=" not in pair:
            raise CorpusError(f"expected dataset=path, got '{pair}'")
        dataset, path = pair.split("=", 1)
        if dataset in corpora:
            raise CorpusError(f"dataset '{dataset}' given twice")
        corpora[dataset] = load_corpus(path, dataset)
        print(f"loaded {len(corpora[dataset])} samples from {path}", file=sys.stderr)
    return corpora


def cmd_profile(args) -> int:
    config = _config_from_args(args)
    corpora = _parse_corpus_args(args.corpus)
    out = _out_dir(config)
    profiles = [
        bias.profile_dataset(
            corpus,
            max_support=config.fusion_max_support,
            gain_threshold=config.fusion_delta,
            truncate_doc_tokens=config.truncate_doc_tokens,
        )
        for corpus in corpora.values()
    ]
    emit_profile(
        profiles,
        out / "profiles.csv",
        out / "profiles.json",
        novelty_n=config.novelty_n,
        repetition_n=config.repetition_n,
    )
    print(f"wrote profiles for {len(profiles)} datasets to {out}", file=sys.stderr)
    return 0


def cmd_score(args) -> int:
    config = _config_from_args(args)
    corpora = _parse_corpus_args(args.corpus)
    outputs = []
    for path in args.outputs or []:
        outputs.extend(load_outputs(path))
    report = validate_alignment(corpora, outputs)
    if not report.is_clean:
        print("alignment errors:", file=sys.stderr)
        print(report.describe(), file=sys.stderr)
        return 2
    store = ScoreStore(args.store)
    metrics = [m.strip() for m in args.metrics.split(",") if m.strip()]
    rouge_metrics = [m for m in metrics if m in rouge.ROUGE_METRICS]
    if rouge_metrics and outputs:
        fingerprints = {m: config.fingerprint(m) for m in rouge_metrics}
        by_cell: dict[tuple, list] = {}
        for output in outputs:
            by_cell.setdefault(
                (output.system, output.train_dataset, output.test_dataset), []
            ).append(output)
        pending = []
        for cell, group in by_cell.items():
            if all(store.has_cell(*cell, m, fingerprints[m]) for m in rouge_metrics):
                print(f"skip {'/'.join(cell)}: already scored", file=sys.stderr)
                continue
            pending.extend(group)
        records = [
            ScoreRecord(
                sample_id=output.sample_id,
                system=output.system,
                train_dataset=output.train_dataset,
                test_dataset=output.test_dataset,
                metric=metric,
                value=value,
                fingerprint=fingerprints[metric],
            )
            for output, metric, value in rouge.score_corpus(
                pending,
                corpora,
                stemming=config.stemming,
                rouge_l_mode=config.rouge_l_mode,
                metrics=rouge_metrics,
                workers=args.workers,
            )
        ]
        added = store.put_records(records)
        print(f"stored {added} ROUGE records", file=sys.stderr)
    if args.verdicts:
        fingerprint = config.fingerprint("factuality")
        verdicts = factuality.load_verdicts(args.verdicts, outputs or None)
        records = []
        for verdict in verdicts:
            if store.has_cell(
                verdict.system, verdict.train_dataset, verdict.test_dataset,
                "factuality", fingerprint,
            ):
                continue
            records.append(
                ScoreRecord(
                    sample_id=f"{verdict.sample_id}#{verdict.sentence_index}",
                    system=verdict.system,
                    train_dataset=verdict.train_dataset,
                    test_dataset=verdict.test_dataset,
                    metric="factuality",
                    value=float(verdict.consistent),
                    fingerprint=fingerprint,
                )
            )
        added = store.put_records(records)
        print(f"stored {added} factuality records", file=sys.stderr)
    return 0


def _matrix_from_args(args, config, system, metric, grid_path) -> crossgrid.CrossMatrix:
    if grid_path:
        order, values = read_grid_csv(grid_path)
        return crossgrid.CrossMatrix(
            system=system, metric=metric, dataset_order=order, values=values
        )
    if not config.datasets:
        raise ValueError("--datasets is required when reading from a store")
    store = ScoreStore(args.store)
    return crossgrid.build_matrix(
        store, system, metric, config.datasets, config.fingerprint(metric)
    )


def cmd_matrix(args) -> int:
    config = _config_from_args(args)
    out = _out_dir(config)
    matrix = _matrix_from_args(args, config, args.system, args.metric, args.grid)
    stem = f"matrix_{matrix.system}_{matrix.metric}"
    aggregation = "pooled-sentences" if matrix.metric == "factuality" else "mean-of-samples"
    write_matrix_csv(matrix, out / f"{stem}.csv")
    write_matrix_json(matrix, out / f"{stem}.json", aggregation=aggregation)
    if args.normalized:
        normalized = crossgrid.normalized_matrix(matrix)
        write_matrix_csv(normalized, out / f"{stem}.norm.csv")
        write_matrix_json(normalized, out / f"{stem}.norm.json", aggregation=aggregation)
    scores = crossgrid.holistic_scores(matrix)
    payload = {
        "system": matrix.system,
        "metric": matrix.metric,
        "stiffness": scores.stiffness,
        "stableness": scores.stableness,
        "in_dataset_mean": crossgrid.in_dataset_mean(matrix),
        "printed": {
            "stiffness": fmt(scores.stiffness, 0),
            "stableness": fmt(scores.stableness, 0),
        },
    }
    with open(out / f"holistic_{matrix.system}_{matrix.metric}.json", "w",
              encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(
        f"{matrix.system}/{matrix.metric}: stiffness {payload['printed']['stiffness']} "
        f"stableness {payload['printed']['stableness']}"
    )
    return 0


def cmd_compare(args) -> int:
    config = _config_from_args(args)
    out = _out_dir(config)
    matrix_a = _matrix_from_args(args, config, args.system_a, args.metric, args.grid_a)
    matrix_b = _matrix_from_args(args, config, args.system_b, args.metric, args.grid_b)
    raw = crossgrid.diff(matrix_a, matrix_b)
    norm = crossgrid.diff(matrix_a, matrix_b, normalized=True)
    pair = f"{matrix_a.system}_vs_{matrix_b.system}"
    order = matrix_a.dataset_order
    write_diff_csv(raw, order, out / f"diff_{pair}.csv")
    write_diff_csv(norm, order, out / f"diff_{pair}.norm.csv")
    emit_heatmap(raw, order, order, out / f"diff_{pair}.svg", title=pair)
    emit_heatmap(norm, order, order, out / f"diff_{pair}.norm.svg", title=f"{pair} (normalized)")
    rows = []
    for measure in ("cells", "cells-normalized"):
        result = stats.compare_systems(matrix_a, matrix_b, measure, alpha=config.alpha)
        rows.append((matrix_a.system, matrix_b.system, matrix_a.metric, measure, result))
    write_significance_csv(rows, out / "significance.csv")
    for _, _, _, measure, result in rows:
        verdict = "significant" if result.significant_at_alpha else "not significant"
        print(f"{pair} {measure}: W={fmt(result.statistic, 1)} p={result.p_two_sided:.6g} ({verdict})")
    return 0


def cmd_rank(args) -> int:
    config = _config_from_args(args)
    out = _out_dir(config)
    store = ScoreStore(args.store)
    systems = (
        [s.strip() for s in args.systems.split(",") if s.strip()]
        if args.systems
        else store.systems()
    )
    if not systems:
        raise ValueError("no systems to rank")
    fingerprint = config.fingerprint(args.metric)
    values: dict[str, float] = {}
    for system in systems:
        matrix = crossgrid.build_matrix(
            store, system, args.metric, config.datasets, fingerprint
        )
        if args.measure == "stiffness":
            values[system] = crossgrid.stiffness(matrix)
        elif args.measure == "stableness":
            values[system] = crossgrid.stableness(matrix)
        else:
            values[system] = crossgrid.in_dataset_mean(matrix)
    label = f"{args.measure}_{args.metric}"
    emit_ranking(values, label, out / f"ranking_{label}.csv")
    for rank, system in enumerate(crossgrid.rank_systems(values), start=1):
        print(f"{rank}. {system} {fmt(values[system], 2)}")
    return 0


def _bridge_functions():
    def rouge_score_dict(score: rouge.RougeScore) -> dict:
        return {"precision": score.precision, "recall": score.recall, "f1": score.f1}

    def call_rouge_n(candidate, reference, n):
        return rouge_score_dict(rouge.rouge_n(candidate, reference, n))

    def call_rouge_l(candidate, reference, mode="flat"):
        return rouge_score_dict(rouge.rouge_l(candidate, reference, mode))

    def call_fragments(summary, document):
        return [asdict(f) for f in bias.extract_fragments(summary, document)]

    def call_fusion(summary_sents, document_sents, max_support=3, gain_threshold=0.02):
        score, supports = bias.fusion_score(
            summary_sents, document_sents, max_support, gain_threshold
        )
        return {"score": score, "supports": supports}

    def call_wilcoxon(x, y, alpha=0.05, method="auto"):
        return asdict(stats.wilcoxon_signed_rank(x, y, alpha=alpha, method=method))

    def call_normalize(values):
        return [[float(v) for v in row] for row in crossgrid.normalize(values)]

    def call_score_corpus(corpora, outputs, stemming=True, rouge_l_mode="auto",
                          metrics=rouge.ROUGE_METRICS):
        loaded = {name: load_corpus(path, name) for name, path in corpora.items()}
        triples = rouge.score_corpus(
            load_outputs(outputs), loaded,
            stemming=stemming, rouge_l_mode=rouge_l_mode, metrics=metrics,
        )
        return [
            {
                "sample_id": output.sample_id,
                "system": output.system,
                "train_dataset": output.train_dataset,
                "test_dataset": output.test_dataset,
                "metric": metric,
                "value": value,
            }
            for output, metric, value in triples
        ]

    return {
        "rouge_n": call_rouge_n,
        "rouge_l": call_rouge_l,
        "extract_fragments": call_fragments,
        "novelty": lambda summary, document, n: bias.novelty(summary, document, n),
        "repetition": lambda summary, n: bias.repetition(summary, n),
        "fusion_score": call_fusion,
        "stiffness": lambda values: crossgrid.stiffness(values),
        "stableness": lambda values: crossgrid.stableness(values),
        "normalize": call_normalize,
        "in_dataset_mean": lambda values: crossgrid.in_dataset_mean(values),
        "wilcoxon_signed_rank": call_wilcoxon,
        "score_corpus": call_score_corpus,
    }


def cmd_call(args) -> int:
    functions = _bridge_functions()
    if args.fn not in functions:
        raise ValueError(
            f"unknown function '{args.fn}' (available: {', '.join(sorted(functions))})"
        )
    raw = sys.stdin.read()
    kwargs = json.loads(raw) if raw.strip() else {}
    if not isinstance(kwargs, dict):
        raise ValueError("bridge input must be a JSON object of keyword arguments")
    result = functions[args.fn](**kwargs)
    sys.stdout.write(json.dumps({"result": result}))
    sys.stdout.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosseval",
        description="Cross-dataset evaluation toolkit for text summarization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (flags override it)")
    common.add_argument("--out", help=f"output directory (or ${OUT_DIR_ENV})")
    common.add_argument("--stemming", choices=["on", "off"], dest="stemming_flag",
                        help="Porter stemming for ROUGE (default on)")
    common.add_argument("--novelty-n", type=int, dest="novelty_n")
    common.add_argument("--repetition-n", type=int, dest="repetition_n")
    common.add_argument("--fusion-delta", type=float, dest="fusion_delta")
    common.add_argument("--fusion-max-support", type=int, dest="fusion_max_support")
    common.add_argument("--rouge-l", choices=["auto", "union", "flat"], dest="rouge_l_mode")
    common.add_argument("--alpha", type=float)
    common.add_argument("--truncate-doc", type=int, dest="truncate_doc_tokens",
                        help="compute bias metrics on the first N document tokens")
    common.add_argument("--datasets", help="comma-separated dataset order for matrices")

    p = sub.add_parser("profile", parents=[common],
                       help="dataset bias profiles (coverage, copy length, ...)")
    p.add_argument("corpus", nargs="+", help="dataset=path (JSON-lines corpus)")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("score", parents=[common],
                       help="score system outputs and persist per-sample records")
    p.add_argument("--corpus", action="append", required=True, help="dataset=path")
    p.add_argument("--outputs", action="append", help="system outputs (JSON-lines)")
    p.add_argument("--verdicts", help="factuality sentence verdicts (JSON-lines)")
    p.add_argument("--metrics", default="rouge1,rouge2,rougeL")
    p.add_argument("--store", required=True, help="score store file (JSON-lines)")
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes for per-sample scoring")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("matrix", parents=[common],
                       help="cross-dataset matrix and holistic measures")
    p.add_argument("--store")
    p.add_argument("--system", default="grid")
    p.add_argument("--metric", default="value")
    p.add_argument("--grid", help="read the matrix from a CSV instead of a store")
    p.add_argument("--normalized", action="store_true",
                   help="also emit the diagonal-normalized matrix")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("compare", parents=[common],
                       help="pairwise diffs, heatmaps and significance test")
    p.add_argument("--store")
    p.add_argument("--system-a", dest="system_a", default="A")
    p.add_argument("--system-b", dest="system_b", default="B")
    p.add_argument("--metric", default="value")
    p.add_argument("--grid-a", dest="grid_a", help="matrix CSV for system A")
    p.add_argument("--grid-b", dest="grid_b", help="matrix CSV for system B")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("rank", parents=[common], help="ranking table for a measure")
    p.add_argument("--store", required=True)
    p.add_argument("--metric", required=True)
    p.add_argument("--measure", choices=["stiffness", "stableness", "in_dataset"],
                   required=True)
    p.add_argument("--systems", help="comma-separated subset (default: all in store)")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("call", help="invoke one toolkit function (JSON stdin/stdout)")
    p.add_argument("fn")
    p.set_defaults(func=cmd_call)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "stemming_flag", None) is not None:
        args.stemming = args.stemming_flag == "on"
    else:
        args.stemming = None
    if getattr(args, "datasets", None):
        args.datasets = [d.strip() for d in args.datasets.split(",") if d.strip()]
    try:
        return args.func(args)
    except (CorpusError, ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
