#!/usr/bin/env python3
"""Train the bundled default ranking model on the synthetic corpus.

Writes src/faqkb/data/default-model.json and prints a short report. The
output is deterministic for a fixed seed, so re-running this script must
reproduce the committed model byte for byte.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from faqkb.metrics import pairwise_auc
from faqkb.ranker import DEFAULT_MODEL_PATH, TrainParams, save_model, score, train
from faqkb.synth import training_set


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", type=Path, default=DEFAULT_MODEL_PATH)
    args = parser.parse_args()

    data = training_set(seed=args.seed)
    positives = sum(1 for r in data.rows if r.label == 1)
    print(f"training rows: {len(data.rows)} ({positives} positive)")

    params = TrainParams(
        max_trees=200, max_depth=3, learning_rate=0.1, min_leaf=8,
        validation_fraction=0.2, patience=3, prune_pct=5.0, seed=args.seed,
    )
    model = train(data, params)

    labels = [r.label for r in data.rows]
    scores = [score(model, r.features) for r in data.rows]
    auc = pairwise_auc(labels, scores)
    pos_scores = [s for s, y in zip(scores, labels) if y == 1]
    neg_scores = [s for s, y in zip(scores, labels) if y == 0]

    print(f"trees: {len(model.trees)}")
    print(f"corpus AUC: {auc:.4f}")
    print(f"mean positive score: {sum(pos_scores) / len(pos_scores):.3f}")
    print(f"mean negative score: {sum(neg_scores) / len(neg_scores):.3f}")
    for key in ("stoppedAt", "validationLoss", "prunedLeaves"):
        if key in model.metadata:
            print(f"{key}: {model.metadata[key]}")

    save_model(model, args.out)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
