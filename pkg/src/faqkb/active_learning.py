"""Suggestion generation, clustering, and application for KB improvement.

Two signals produce suggestions: the ranker's top two candidates disagreeing
across feature families (trigram similarity prefers one, taxonomy similarity
the other, final scores close), and explicit end-user feedback where the
clicked answer differs from the shown one. Pending suggestions are clustered
with DBSCAN over query trigram vectors so near-duplicate phrasings surface
as a single representative.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .features import semantic_vector
from .kb import KnowledgeBase, QAPair, RankedAnswer

DISAGREEMENT_MARGIN = 0.08
SCORE_BAND = 0.1
DBSCAN_EPS = 0.25
DBSCAN_MIN_PTS = 2

SUGGESTION_ORIGINS = ("disagreement", "feedback")
SUGGESTION_STATUSES = ("pending", "accepted", "rejected")


@dataclass(frozen=True)
class FeedbackRecord:
    query_text: str
    shown_qa_id: int
    selected_qa_id: int | None
    timestamp: float


@dataclass(frozen=True)
class Suggestion:
    suggestion_id: int
    query_text: str
    target_qa_id: int
    origin: str
    created_at: float
    cluster_id: int | None = None
    status: str = "pending"


def detect_disagreement(
    ranked: Sequence[RankedAnswer],
    margin: float = DISAGREEMENT_MARGIN,
    score_band: float = SCORE_BAND,
) -> tuple[int, int] | None:
    """Fire when the top two answers split the feature families.

    Returns (winnerQaId, runnerUpQaId) when the trigram and taxonomy
    question similarities prefer opposite candidates, both by more than
    ``margin``, while the final scores sit within ``score_band`` of each
    other. The winner is the suggestion target: the model is unsure, so a
    developer should confirm which answer the query belongs to.
    """
    if len(ranked) < 2:
        return None
    a, b = ranked[0], ranked[1]
    if a.features is None or b.features is None:
        return None
    if a.qa_id is None or b.qa_id is None:
        return None
    sem_margin = a.features.semQ - b.features.semQ
    wn_margin = a.features.wnQ - b.features.wnQ
    if sem_margin * wn_margin >= 0:
        return None
    if abs(sem_margin) <= margin or abs(wn_margin) <= margin:
        return None
    if abs(a.score - b.score) > score_band:
        return None
    return a.qa_id, b.qa_id


def suggestion_from_disagreement(
    suggestion_id: int,
    query_text: str,
    winner_qa_id: int,
    created_at: float,
) -> Suggestion:
    return Suggestion(
        suggestion_id=suggestion_id,
        query_text=query_text,
        target_qa_id=winner_qa_id,
        origin="disagreement",
        created_at=created_at,
    )


def suggestion_from_feedback(
    suggestion_id: int, record: FeedbackRecord
) -> Suggestion | None:
    """An end user clicking a different answer than the one shown is a
    correction worth reviewing; agreement produces nothing."""
    if record.selected_qa_id is None or record.selected_qa_id == record.shown_qa_id:
        return None
    return Suggestion(
        suggestion_id=suggestion_id,
        query_text=record.query_text,
        target_qa_id=record.selected_qa_id,
        origin="feedback",
        created_at=record.timestamp,
    )


def _cosine_distances(vectors: np.ndarray) -> np.ndarray:
    # semantic_vector output is unit length or all-zero; zero rows get
    # similarity 0 (distance 1) to everything, matching the cosine guard
    sims = vectors @ vectors.T
    return 1.0 - np.clip(sims, -1.0, 1.0)


def _dbscan(distances: np.ndarray, eps: float, min_pts: int) -> list[int]:
    """Textbook DBSCAN over a precomputed distance matrix.

    Returns a label per point; -1 marks noise. A point's eps-neighborhood
    includes itself, so min_pts=1 makes every point a core point and the
    clusters become connected components of the eps graph.
    """
    n = distances.shape[0]
    neighbors = [np.flatnonzero(distances[i] <= eps).tolist() for i in range(n)]
    core = [len(neighbors[i]) >= min_pts for i in range(n)]
    labels = [-1] * n
    visited = [False] * n
    cluster = 0
    for start in range(n):
        if visited[start] or not core[start]:
            continue
        visited[start] = True
        labels[start] = cluster
        frontier = list(neighbors[start])
        while frontier:
            point = frontier.pop(0)
            if labels[point] == -1:
                labels[point] = cluster  # border or core, joins this cluster
            if visited[point]:
                continue
            visited[point] = True
            if core[point]:
                frontier.extend(neighbors[point])
        cluster += 1
    return labels


def cluster_suggestions(
    pending: Sequence[Suggestion],
    eps: float = DBSCAN_EPS,
    min_pts: int = DBSCAN_MIN_PTS,
) -> list[Suggestion]:
    """Assign a clusterId to every suggestion, input order preserved.

    Noise points become their own singleton clusters so every suggestion
    remains actionable; they are just never grouped.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if min_pts < 1:
        raise ValueError("min_pts must be at least 1")
    if not pending:
        return []
    vectors = np.stack([semantic_vector(s.query_text) for s in pending])
    labels = _dbscan(_cosine_distances(vectors), eps, min_pts)
    next_cluster = max(labels) + 1 if labels else 0
    assigned: list[int] = []
    for label in labels:
        if label == -1:
            assigned.append(next_cluster)
            next_cluster += 1
        else:
            assigned.append(label)
    return [replace(s, cluster_id=c) for s, c in zip(pending, assigned)]


def representatives(clustered: Sequence[Suggestion]) -> list[Suggestion]:
    """One suggestion per cluster: the member nearest the cluster centroid,
    ties resolved by earliest creation time, then by suggestionId."""
    by_cluster: dict[int, list[Suggestion]] = {}
    for s in clustered:
        if s.cluster_id is None:
            raise ValueError(f"suggestion {s.suggestion_id}: no clusterId assigned")
        by_cluster.setdefault(s.cluster_id, []).append(s)
    reps = []
    for cluster_id in sorted(by_cluster):
        members = by_cluster[cluster_id]
        vectors = np.stack([semantic_vector(s.query_text) for s in members])
        centroid = vectors.mean(axis=0)
        norm = float(np.linalg.norm(centroid))
        if norm == 0.0:
            distances = [1.0] * len(members)
        else:
            distances = (1.0 - vectors @ (centroid / norm)).tolist()
        reps.append(
            min(
                zip(distances, members),
                key=lambda pair: (pair[0], pair[1].created_at, pair[1].suggestion_id),
            )[1]
        )
    return reps


def _resolve_one(suggestion: Suggestion, decision: str) -> Suggestion:
    if decision not in ("accept", "reject"):
        raise ValueError(f"unknown decision {decision!r}; expected accept or reject")
    if suggestion.status != "pending":
        raise ValueError(
            f"suggestion {suggestion.suggestion_id}: already {suggestion.status}"
        )
    return replace(
        suggestion, status="accepted" if decision == "accept" else "rejected"
    )


def _with_alternate(kb: KnowledgeBase, target_qa_id: int, query_text: str) -> KnowledgeBase:
    target: QAPair | None = next(
        (qa for qa in kb.qa_pairs if qa.id == target_qa_id), None
    )
    if target is None:
        raise ValueError(f"target QA {target_qa_id} not found in KB {kb.kb_id!r}")
    text = query_text.strip()
    if text == target.question or text in target.alternate_questions:
        return kb
    updated = replace(
        target, alternate_questions=target.alternate_questions + (text,)
    )
    return kb.with_qa_pairs(
        [updated if qa.id == target_qa_id else qa for qa in kb.qa_pairs]
    )


def apply_decision(
    kb: KnowledgeBase, suggestion: Suggestion, decision: str
) -> tuple[KnowledgeBase, Suggestion]:
    """Resolve one suggestion. Accepting grafts the query text onto the
    target's alternate questions and rebuilds the KB snapshot (callers must
    rebuild their index from it); rejecting leaves the KB untouched."""
    resolved = _resolve_one(suggestion, decision)
    if decision == "reject":
        return kb, resolved
    return _with_alternate(kb, suggestion.target_qa_id, suggestion.query_text), resolved


def resolve_cluster(
    kb: KnowledgeBase, members: Iterable[Suggestion], decision: str
) -> tuple[KnowledgeBase, list[Suggestion]]:
    """Resolve a whole cluster with one decision; members share the outcome.

    Accepted members append their query texts to their targets in order,
    duplicates (including texts already present) skipped.
    """
    resolved = []
    for suggestion in members:
        kb, done = apply_decision(kb, suggestion, decision)
        resolved.append(done)
    return kb, resolved


# --- JSONL persistence shapes (used by the service's suggestion store) ---

def suggestion_to_dict(s: Suggestion) -> dict:
    return {
        "suggestionId": s.suggestion_id,
        "queryText": s.query_text,
        "targetQaId": s.target_qa_id,
        "origin": s.origin,
        "createdAt": s.created_at,
        "clusterId": s.cluster_id,
        "status": s.status,
    }


def suggestion_from_dict(doc: dict) -> Suggestion:
    origin = doc["origin"]
    if origin not in SUGGESTION_ORIGINS:
        raise ValueError(f"unknown suggestion origin {origin!r}")
    status = doc.get("status", "pending")
    if status not in SUGGESTION_STATUSES:
        raise ValueError(f"unknown suggestion status {status!r}")
    return Suggestion(
        suggestion_id=int(doc["suggestionId"]),
        query_text=str(doc["queryText"]),
        target_qa_id=int(doc["targetQaId"]),
        origin=origin,
        created_at=float(doc["createdAt"]),
        cluster_id=doc.get("clusterId"),
        status=status,
    )


def feedback_to_dict(r: FeedbackRecord) -> dict:
    return {
        "queryText": r.query_text,
        "shownQaId": r.shown_qa_id,
        "selectedQaId": r.selected_qa_id,
        "timestamp": r.timestamp,
    }


def feedback_from_dict(doc: dict) -> FeedbackRecord:
    selected = doc.get("selectedQaId")
    return FeedbackRecord(
        query_text=str(doc["queryText"]),
        shown_qa_id=int(doc["shownQaId"]),
        selected_qa_id=None if selected is None else int(selected),
        timestamp=float(doc.get("timestamp", 0.0)),
    )
