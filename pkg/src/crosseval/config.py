"""Run configuration shared by the CLI and the scripting surface."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .store import config_fingerprint


@dataclass
class RunConfig:
    stemming: bool = True
    novelty_n: int = 2
    repetition_n: int = 3
    fusion_delta: float = 0.02
    fusion_max_support: int = 3
    rouge_l_mode: str = "auto"
    alpha: float = 0.05
    truncate_doc_tokens: int | None = None
    datasets: list[str] = field(default_factory=list)
    out_dir: str = "."

    def fingerprint(self, metric: str) -> str:
        """Hash of the options that can change the metric's values."""
        if metric.startswith("rouge"):
            options = {"stemming": self.stemming, "rouge_l_mode": self.rouge_l_mode}
        elif metric == "novelty":
            options = {"n": self.novelty_n}
        elif metric == "repetition":
            options = {"n": self.repetition_n}
        elif metric == "fusion":
            options = {
                "delta": self.fusion_delta,
                "max_support": self.fusion_max_support,
            }
        else:
            options = {}
        return config_fingerprint(metric, options)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def load_config(path: str | Path) -> RunConfig:
    """Config file with the same field names as the CLI flags."""
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    known = {f.name for f in RunConfig.__dataclass_fields__.values()}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config fields: {', '.join(sorted(unknown))}")
    return RunConfig(**data)
