"""Gradient-boosted decision-tree fusion model over the 13 ranking features.

Logistic-loss boosting with squared-error regression trees and Newton
leaf values. Early stopping watches the generality-to-progress ratio
(validation improvement per unit of training improvement); tolerant
pruning then collapses low-magnitude leaf pairs as long as validation
loss stays within 1e-6 of the stopping point. Models serialize to
plain JSON with provenance pins for the stop-word list and taxonomy.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .features import (
    DATA_DIR,
    FEATURE_NAMES,
    FeatureExtractor,
    FeatureVector,
    taxonomy_fingerprint,
)
from .index import InvertedIndex, RetrievalHit
from .kb import NO_ANSWER_TEXT, KnowledgeBase, QueryContext, RankedAnswer
from .textpipe import stopwords_fingerprint

MODEL_VERSION = 1
DEFAULT_MODEL_PATH = DATA_DIR / "default-model.json"

MAX_LEAF_VALUE = 4.0
RATIO_FLOOR = 0.1
PRUNE_LOSS_SLACK = 1e-6
DEFAULT_NO_ANSWER_THRESHOLD = 0.35
DEFAULT_DRIFT_BOUND = 0.15


@dataclass(frozen=True)
class TrainingRow:
    features: FeatureVector
    label: int
    query_id: int


@dataclass(frozen=True)
class TrainingSet:
    rows: tuple[TrainingRow, ...]

    def matrix(self) -> tuple[np.ndarray, np.ndarray]:
        X = np.array([row.features.as_array() for row in self.rows], dtype=np.float64)
        y = np.array([row.label for row in self.rows], dtype=np.float64)
        return X, y


@dataclass(frozen=True)
class TrainParams:
    max_trees: int = 200
    max_depth: int = 3
    learning_rate: float = 0.1
    min_leaf: int = 5
    validation_fraction: float = 0.2
    patience: int = 3
    prune_pct: float = 5.0
    seed: int = 0


@dataclass(frozen=True)
class GbdtModel:
    trees: tuple[dict, ...]
    learning_rate: float
    base_score: float
    feature_names: tuple[str, ...]
    stopwords_hash: str
    taxonomy_hash: str
    metadata: Mapping[str, object]


def _sigmoid(x: np.ndarray | float):
    return 1.0 / (1.0 + np.exp(-np.clip(x, -35.0, 35.0)))


def _logloss(y: np.ndarray, p: np.ndarray) -> float:
    p = np.clip(p, 1e-12, 1.0 - 1e-12)
    return float(-np.mean(y * np.log(p) + (1.0 - y) * np.log(1.0 - p)))


def _eval_tree(node: dict, X: np.ndarray) -> np.ndarray:
    out = np.empty(len(X), dtype=np.float64)
    stack = [(node, np.arange(len(X)))]
    while stack:
        cur, idx = stack.pop()
        if len(idx) == 0:
            continue
        if "value" in cur:
            out[idx] = cur["value"]
            continue
        mask = X[idx, cur["featureIndex"]] <= cur["threshold"]
        stack.append((cur["left"], idx[mask]))
        stack.append((cur["right"], idx[~mask]))
    return out


def _eval_ensemble(trees: Sequence[dict], X: np.ndarray, base: float, lr: float) -> np.ndarray:
    raw = np.full(len(X), base, dtype=np.float64)
    for tree in trees:
        raw += lr * _eval_tree(tree, X)
    return raw


def _best_split(X: np.ndarray, r: np.ndarray, min_leaf: int):
    """Best (feature, threshold, gain) by squared-error reduction, or None."""
    n = len(r)
    if n < 2 * min_leaf:
        return None
    total = r.sum()
    base_sse = total * total / n
    best_gain = 1e-12
    best = None
    for f in range(X.shape[1]):
        values = X[:, f]
        order = np.argsort(values, kind="stable")
        sv = values[order]
        left_sum = np.cumsum(r[order])[:-1]
        n_left = np.arange(1, n, dtype=np.float64)
        right_sum = total - left_sum
        gain = left_sum**2 / n_left + right_sum**2 / (n - n_left) - base_sse
        valid = (n_left >= min_leaf) & (n_left <= n - min_leaf) & (sv[:-1] != sv[1:])
        gain = np.where(valid, gain, -np.inf)
        i = int(np.argmax(gain))
        if gain[i] > best_gain:
            best_gain = float(gain[i])
            best = (f, float((sv[i] + sv[i + 1]) / 2.0), best_gain)
    return best


def _fit_tree(
    X: np.ndarray,
    r: np.ndarray,
    h: np.ndarray,
    max_depth: int,
    min_leaf: int,
    gains: np.ndarray,
) -> dict:
    def leaf(idx: np.ndarray) -> dict:
        denom = h[idx].sum()
        value = r[idx].sum() / denom if denom > 1e-12 else 0.0
        value = float(np.clip(value, -MAX_LEAF_VALUE, MAX_LEAF_VALUE))
        return {"value": value, "count": int(len(idx))}

    def build(idx: np.ndarray, depth: int) -> dict:
        if depth >= max_depth:
            return leaf(idx)
        found = _best_split(X[idx], r[idx], min_leaf)
        if found is None:
            return leaf(idx)
        f, threshold, gain = found
        gains[f] += gain
        mask = X[idx, f] <= threshold
        return {
            "featureIndex": int(f),
            "threshold": float(threshold),
            "left": build(idx[mask], depth + 1),
            "right": build(idx[~mask], depth + 1),
        }

    return build(np.arange(len(r)), 0)


def _stratified_split(y: np.ndarray, fraction: float, rng: np.random.Generator):
    train_idx = []
    val_idx = []
    for cls in (0.0, 1.0):
        members = np.flatnonzero(y == cls)
        members = members[rng.permutation(len(members))]
        n_val = int(round(fraction * len(members)))
        n_val = max(1, min(n_val, len(members) - 1))
        val_idx.extend(members[:n_val])
        train_idx.extend(members[n_val:])
    return np.sort(np.array(train_idx)), np.sort(np.array(val_idx))


def _iter_leaf_parents(node: dict):
    """Yield internal nodes whose children are both leaves."""
    if "value" in node:
        return
    left, right = node["left"], node["right"]
    if "value" in left and "value" in right:
        yield node
    yield from _iter_leaf_parents(left)
    yield from _iter_leaf_parents(right)


def _walk_leaves(node: dict):
    if "value" in node:
        yield node
        return
    yield from _walk_leaves(node["left"])
    yield from _walk_leaves(node["right"])


def _tolerant_prune(
    trees: list[dict],
    X_val: np.ndarray,
    y_val: np.ndarray,
    base: float,
    lr: float,
    prune_pct: float,
    budget_loss: float,
) -> int:
    """Collapse leaf pairs below the magnitude percentile; never worsen
    validation loss beyond budget_loss + PRUNE_LOSS_SLACK. Returns the
    number of merges kept."""
    magnitudes = [abs(leaf["value"]) for tree in trees for leaf in _walk_leaves(tree)]
    if not magnitudes:
        return 0
    cutoff = float(np.percentile(magnitudes, prune_pct))
    merged = 0
    changed = True
    while changed:
        changed = False
        for tree in trees:
            for parent in list(_iter_leaf_parents(tree)):
                left, right = parent["left"], parent["right"]
                if min(abs(left["value"]), abs(right["value"])) >= cutoff:
                    continue
                total = left["count"] + right["count"]
                if total == 0:
                    value = 0.0
                else:
                    value = (
                        left["value"] * left["count"] + right["value"] * right["count"]
                    ) / total
                saved = dict(parent)
                parent.clear()
                parent.update({"value": float(value), "count": total})
                loss = _logloss(y_val, _sigmoid(_eval_ensemble(trees, X_val, base, lr)))
                if loss > budget_loss + PRUNE_LOSS_SLACK:
                    parent.clear()
                    parent.update(saved)
                else:
                    merged += 1
                    changed = True
    return merged


def train(data: TrainingSet, params: TrainParams = TrainParams()) -> GbdtModel:
    if len(data.rows) < 20:
        raise ValueError(f"training needs at least 20 rows, got {len(data.rows)}")
    X, y = data.matrix()
    if not (np.any(y == 0.0) and np.any(y == 1.0)):
        raise ValueError("degenerate labels: training data must contain both classes")

    rng = np.random.default_rng(params.seed)
    train_idx, val_idx = _stratified_split(y, params.validation_fraction, rng)
    X_train, y_train = X[train_idx], y[train_idx]
    X_val, y_val = X[val_idx], y[val_idx]

    prior = float(np.clip(y_train.mean(), 1e-6, 1.0 - 1e-6))
    base = float(np.log(prior / (1.0 - prior)))

    F_train = np.full(len(y_train), base)
    F_val = np.full(len(y_val), base)
    train_losses = [_logloss(y_train, _sigmoid(F_train))]
    val_losses = [_logloss(y_val, _sigmoid(F_val))]

    trees: list[dict] = []
    tree_gains: list[np.ndarray] = []
    streak = 0
    stopped_early = False
    for _ in range(params.max_trees):
        p = _sigmoid(F_train)
        residuals = y_train - p
        hessians = p * (1.0 - p)
        gains = np.zeros(X.shape[1])
        tree = _fit_tree(X_train, residuals, hessians, params.max_depth, params.min_leaf, gains)
        trees.append(tree)
        tree_gains.append(gains)
        F_train += params.learning_rate * _eval_tree(tree, X_train)
        F_val += params.learning_rate * _eval_tree(tree, X_val)
        train_losses.append(_logloss(y_train, _sigmoid(F_train)))
        val_losses.append(_logloss(y_val, _sigmoid(F_val)))

        train_improvement = train_losses[-2] - train_losses[-1]
        val_improvement = val_losses[-2] - val_losses[-1]
        ratio = val_improvement / max(train_improvement, 1e-12)
        if ratio < RATIO_FLOOR:
            streak += 1
        else:
            streak = 0
        if streak >= params.patience:
            # the whole streak made no validation progress; drop it
            del trees[-params.patience :]
            del tree_gains[-params.patience :]
            stopped_early = True
            break

    n_kept = len(trees)
    stopping_val_loss = val_losses[n_kept]
    trees = copy.deepcopy(trees)
    merges = _tolerant_prune(
        trees, X_val, y_val, base, params.learning_rate, params.prune_pct, stopping_val_loss
    )
    final_val_loss = _logloss(
        y_val, _sigmoid(_eval_ensemble(trees, X_val, base, params.learning_rate))
    )

    total_gains = np.sum(tree_gains, axis=0) if tree_gains else np.zeros(X.shape[1])
    metadata = {
        "trainedRows": len(data.rows),
        "treeCount": len(trees),
        "stoppedEarly": stopped_early,
        "prunedLeafPairs": merges,
        "validationLossAtStop": stopping_val_loss,
        "validationLoss": final_val_loss,
        "featureGains": {
            name: float(gain) for name, gain in zip(FEATURE_NAMES, total_gains)
        },
    }
    return GbdtModel(
        trees=tuple(trees),
        learning_rate=params.learning_rate,
        base_score=base,
        feature_names=FEATURE_NAMES,
        stopwords_hash=stopwords_fingerprint(),
        taxonomy_hash=taxonomy_fingerprint(),
        metadata=metadata,
    )


def incremental_train(
    model: GbdtModel,
    new_data: TrainingSet,
    max_new_trees: int,
    drift_bound: float = DEFAULT_DRIFT_BOUND,
    probe: TrainingSet | None = None,
    params: TrainParams = TrainParams(),
) -> GbdtModel:
    if tuple(model.feature_names) != FEATURE_NAMES:
        raise ValueError("feature mismatch: model feature names do not match this build")
    if model.stopwords_hash != stopwords_fingerprint():
        raise ValueError("provenance mismatch: stop-word list changed since the model was trained")
    if model.taxonomy_hash != taxonomy_fingerprint():
        raise ValueError("provenance mismatch: taxonomy changed since the model was trained")
    if max_new_trees == 0:
        return model

    X, y = new_data.matrix()
    if len(X) == 0:
        return model
    F = _eval_ensemble(model.trees, X, model.base_score, model.learning_rate)
    probe_X = probe.matrix()[0] if probe is not None else X
    before = _sigmoid(_eval_ensemble(model.trees, probe_X, model.base_score, model.learning_rate))

    new_trees: list[dict] = []
    for _ in range(max_new_trees):
        p = _sigmoid(F)
        residuals = y - p
        if float(np.abs(residuals).mean()) < 1e-6:
            break
        hessians = p * (1.0 - p)
        gains = np.zeros(X.shape[1])
        min_leaf = min(params.min_leaf, max(1, len(X) // 4))
        tree = _fit_tree(X, residuals, hessians, params.max_depth, min_leaf, gains)
        new_trees.append(tree)
        F += model.learning_rate * _eval_tree(tree, X)

    all_trees = list(model.trees) + new_trees
    after = _sigmoid(_eval_ensemble(all_trees, probe_X, model.base_score, model.learning_rate))
    drift = float(np.abs(after - before).mean())
    if drift > drift_bound:
        raise ValueError(
            f"incremental training drifted scores by {drift:.4f} on the probe set "
            f"(bound {drift_bound}); run a full retrain instead"
        )
    metadata = dict(model.metadata)
    metadata["incrementalTrees"] = int(metadata.get("incrementalTrees", 0)) + len(new_trees)
    metadata["lastDrift"] = drift
    return replace(model, trees=tuple(all_trees), metadata=metadata)


def score(model: GbdtModel, fv) -> float:
    values = fv.as_array() if isinstance(fv, FeatureVector) else np.asarray(fv, dtype=np.float64)
    if values.shape != (len(model.feature_names),):
        raise ValueError(
            f"feature vector has {values.shape} values, model expects {len(model.feature_names)}"
        )
    raw = model.base_score
    X = values.reshape(1, -1)
    for tree in model.trees:
        raw += model.learning_rate * float(_eval_tree(tree, X)[0])
    return float(_sigmoid(raw))


def score_batch(model: GbdtModel, X: np.ndarray) -> np.ndarray:
    if X.ndim != 2 or X.shape[1] != len(model.feature_names):
        raise ValueError("feature matrix shape does not match model")
    return _sigmoid(_eval_ensemble(model.trees, X, model.base_score, model.learning_rate))


def feature_gains(model: GbdtModel) -> dict[str, float]:
    gains = model.metadata.get("featureGains", {})
    return dict(sorted(gains.items(), key=lambda kv: -kv[1]))


# ---------------------------------------------------------------------------
# Ranking


def score_candidates(
    model: GbdtModel,
    query: str,
    ctx: QueryContext,
    candidates: Sequence[RetrievalHit],
    kb: KnowledgeBase,
    index: InvertedIndex,
    taxonomy,
    global_idf,
) -> list[RankedAnswer]:
    extractor = FeatureExtractor(kb, index, taxonomy, global_idf, query, ctx)
    by_id = {qa.id: qa for qa in kb.qa_pairs}
    ranked = []
    for hit in candidates:
        qa = by_id.get(hit.qa_id)
        if qa is None:
            raise ValueError(f"candidate {hit.qa_id} does not belong to KB {kb.kb_id}")
        fv = extractor.featurize(qa)
        ranked.append(
            RankedAnswer(
                qa_id=qa.id,
                score=score(model, fv),
                answer_text=qa.answer,
                features=fv,
                retrieval_score=hit.score,
            )
        )
    ranked.sort(key=lambda a: (-a.score, -a.retrieval_score, a.qa_id))
    return ranked


def no_answer_sentinel(top: RankedAnswer | None = None) -> RankedAnswer:
    return RankedAnswer(
        qa_id=None,
        score=top.score if top is not None else 0.0,
        answer_text=NO_ANSWER_TEXT,
        features=top.features if top is not None else None,
        retrieval_score=top.retrieval_score if top is not None else 0.0,
    )


def rank(
    model: GbdtModel,
    query: str,
    ctx: QueryContext,
    candidates: Sequence[RetrievalHit],
    kb: KnowledgeBase,
    index: InvertedIndex,
    taxonomy,
    global_idf,
    no_answer_threshold: float = DEFAULT_NO_ANSWER_THRESHOLD,
) -> list[RankedAnswer]:
    ranked = score_candidates(model, query, ctx, candidates, kb, index, taxonomy, global_idf)
    if not ranked or ranked[0].score < no_answer_threshold:
        return [no_answer_sentinel(ranked[0] if ranked else None)]
    return ranked


# ---------------------------------------------------------------------------
# Persistence


def model_to_json(model: GbdtModel) -> str:
    doc = {
        "version": MODEL_VERSION,
        "featureNames": list(model.feature_names),
        "learningRate": model.learning_rate,
        "baseScore": model.base_score,
        "trees": list(model.trees),
        "stopwordsHash": model.stopwords_hash,
        "taxonomyHash": model.taxonomy_hash,
        "metadata": dict(model.metadata),
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def model_from_json(text: str) -> GbdtModel:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError(f"invalid JSON in model file: {err}") from err
    if doc.get("version") != MODEL_VERSION:
        raise ValueError(f"unsupported model version {doc.get('version')!r}")
    names = tuple(doc["featureNames"])
    for tree in doc["trees"]:
        _validate_tree(tree, len(names))
    return GbdtModel(
        trees=tuple(doc["trees"]),
        learning_rate=float(doc["learningRate"]),
        base_score=float(doc["baseScore"]),
        feature_names=names,
        stopwords_hash=doc["stopwordsHash"],
        taxonomy_hash=doc["taxonomyHash"],
        metadata=doc.get("metadata", {}),
    )


def _validate_tree(node: dict, n_features: int) -> None:
    if "value" in node:
        if not isinstance(node["value"], (int, float)):
            raise ValueError("leaf value must be numeric")
        return
    idx = node.get("featureIndex")
    if not isinstance(idx, int) or not 0 <= idx < n_features:
        raise ValueError(f"tree references invalid feature index {idx!r}")
    _validate_tree(node["left"], n_features)
    _validate_tree(node["right"], n_features)


def save_model(model: GbdtModel, path: str | Path) -> None:
    Path(path).write_text(model_to_json(model), encoding="utf-8")


def load_model(path: str | Path) -> GbdtModel:
    return model_from_json(Path(path).read_text(encoding="utf-8"))


def load_default_model() -> GbdtModel:
    return load_model(DEFAULT_MODEL_PATH)
