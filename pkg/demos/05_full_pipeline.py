"""End-to-end pipeline through the CLI: score -> matrix -> compare -> rank.

Builds a toy two-dataset setup with two synthetic "systems", scores them,
assembles matrices, and emits every report artifact into ./demo_out.

Run: python demos/05_full_pipeline.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

OUT = Path("demo_out")

DOCS = {
    "a": [
        ("a1", "the red cat sat on the mat. a dog barked at the cat. nothing else happened.",
         "the red cat sat on the mat. a dog barked."),
        ("a2", "rain fell on the quiet town all week. the river rose slowly. people watched it.",
         "rain fell all week and the river rose."),
        ("a3", "the committee approved the budget. spending will rise next year.",
         "the committee approved the budget."),
    ],
    "b": [
        ("b1", "engineers tested the new bridge for stress under heavy load on tuesday.",
         "engineers tested the new bridge."),
        ("b2", "the museum opened a wing devoted to early photography and rare prints.",
         "the museum opened a photography wing."),
        ("b3", "wheat prices fell as harvests improved across the plains this season.",
         "wheat prices fell as harvests improved."),
    ],
}


def copyish(reference: str) -> str:
    return reference


def lossy(reference: str) -> str:
    # drop the tail to simulate a weaker system
    return reference.split(".")[0] + "."


def run(args):
    print("+ crosseval", " ".join(str(a) for a in args))
    subprocess.run([sys.executable, "-m", "crosseval.cli", *args], check=True)


def main():
    OUT.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        corpus_args = []
        for dataset, rows in DOCS.items():
            path = tmp / f"{dataset}.jsonl"
            with open(path, "w", encoding="utf-8") as f:
                for sid, doc, ref in rows:
                    f.write(json.dumps({"id": sid, "document": doc, "reference": ref}) + "\n")
            corpus_args += ["--corpus", f"{dataset}={path}"]

        outputs = tmp / "outputs.jsonl"
        with open(outputs, "w", encoding="utf-8") as f:
            for system, transform in (("copier", copyish), ("trimmer", lossy)):
                for train in DOCS:
                    for test, rows in DOCS.items():
                        for sid, _, ref in rows:
                            f.write(json.dumps({
                                "id": sid, "system": system,
                                "train_dataset": train, "test_dataset": test,
                                "summary": transform(ref),
                            }) + "\n")

        store = tmp / "scores.jsonl"
        run(["score", *corpus_args, "--outputs", str(outputs), "--store", str(store)])
        run(["profile", f"a={tmp / 'a.jsonl'}", f"b={tmp / 'b.jsonl'}", "--out", str(OUT)])
        for system in ("copier", "trimmer"):
            run(["matrix", "--store", str(store), "--system", system,
                 "--metric", "rouge2", "--datasets", "a,b", "--normalized",
                 "--out", str(OUT)])
        run(["compare", "--store", str(store), "--system-a", "copier",
             "--system-b", "trimmer", "--metric", "rouge2", "--datasets", "a,b",
             "--out", str(OUT)])
        run(["rank", "--store", str(store), "--metric", "rouge2",
             "--measure", "stiffness", "--datasets", "a,b", "--out", str(OUT)])

    print("\nartifacts in", OUT.resolve())
    for path in sorted(OUT.iterdir()):
        print(" ", path.name)


if __name__ == "__main__":
    main()
