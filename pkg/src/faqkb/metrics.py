"""Evaluation metrics and the labeled-query evaluation driver.

AUC is pairwise over pooled binary judgments; F1 judges only each query's
top-ranked answer. Both mirror how retrieval quality is usually reported
for FAQ ranking: one global ordering number plus one answer-or-abstain
number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .features import load_global_idf, load_taxonomy
from .index import MAX_K, RetrievalHit, build_index, retrieve
from .kb import KnowledgeBase, QueryContext
from .ranker import DEFAULT_NO_ANSWER_THRESHOLD, GbdtModel, score_candidates


def pairwise_auc(labels: Sequence[int], scores: Sequence[float]) -> float:
    """Fraction of (positive, negative) pairs ranked correctly; ties count half.

    Computed by counting over the scores sorted once, which equals the
    brute-force all-pairs definition exactly: both reduce to
    (wins + ties/2) / (positives * negatives).
    """
    if len(labels) != len(scores):
        raise ValueError("labels and scores must align")
    if any(y not in (0, 1) for y in labels):
        raise ValueError("labels must be binary")
    total_pos = sum(labels)
    total_neg = len(labels) - total_pos
    if total_pos == 0 or total_neg == 0:
        raise ValueError("AUC needs both classes")

    wins = 0  # negative strictly below the positive
    ties = 0
    negatives_below = 0
    ordered = sorted(zip(scores, labels))
    i = 0
    while i < len(ordered):
        j = i
        pos_here = neg_here = 0
        while j < len(ordered) and ordered[j][0] == ordered[i][0]:
            if ordered[j][1] == 1:
                pos_here += 1
            else:
                neg_here += 1
            j += 1
        wins += pos_here * negatives_below
        ties += pos_here * neg_here
        negatives_below += neg_here
        i = j
    return (wins + 0.5 * ties) / (total_pos * total_neg)


@dataclass(frozen=True)
class QueryOutcome:
    """What happened for one evaluated query's top answer."""

    query: str
    answered: bool  # top score cleared the no-answer threshold
    top_relevant: bool  # the answered QA carries a positive judgment
    has_relevant: bool  # some QA is judged relevant for this query
    top_qa_id: int | None = None
    top_score: float = 0.0


def top_answer_f1(outcomes: Sequence[QueryOutcome]) -> float:
    """Precision/recall harmonic mean judging only each query's top answer.

    Precision is over answered queries; recall is over queries that have
    any relevant QA at all, so abstaining on unanswerable queries is free.
    """
    true_pos = sum(1 for o in outcomes if o.answered and o.top_relevant)
    answered = sum(1 for o in outcomes if o.answered)
    answerable = sum(1 for o in outcomes if o.has_relevant)
    precision = true_pos / answered if answered else 0.0
    recall = true_pos / answerable if answerable else 0.0
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


@dataclass(frozen=True)
class LabelRow:
    line: int
    query: str
    qa_id: int
    label: int


def parse_labels(text: str) -> list[LabelRow]:
    """Parse 'query <TAB> qaId <TAB> 0|1' judgment lines."""
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        parts = raw.split("\t")
        if len(parts) != 3:
            raise ValueError(f"line {number}: expected 'query<TAB>qaId<TAB>label'")
        query, qa_raw, label_raw = parts
        if not query.strip():
            raise ValueError(f"line {number}: empty query")
        try:
            qa_id = int(qa_raw)
        except ValueError:
            raise ValueError(f"line {number}: qaId must be an integer") from None
        if label_raw not in ("0", "1"):
            raise ValueError(f"line {number}: label must be 0 or 1")
        rows.append(LabelRow(line=number, query=query.strip(), qa_id=qa_id, label=int(label_raw)))
    return rows


@dataclass(frozen=True)
class EvalReport:
    auc: float
    f1: float
    queries: int
    rows: int
    threshold: float
    outcomes: tuple[QueryOutcome, ...]

    def to_dict(self, verbose: bool = False) -> dict:
        doc = {
            "auc": self.auc,
            "f1": self.f1,
            "queries": self.queries,
            "rows": self.rows,
            "threshold": self.threshold,
        }
        if verbose:
            doc["perQuery"] = [
                {
                    "query": o.query,
                    "answered": o.answered,
                    "topQaId": o.top_qa_id,
                    "topScore": o.top_score,
                    "topRelevant": o.top_relevant,
                    "hasRelevant": o.has_relevant,
                }
                for o in self.outcomes
            ]
        return doc


def evaluate_labels(
    kb: KnowledgeBase,
    model: GbdtModel,
    rows: Sequence[LabelRow],
    threshold: float = DEFAULT_NO_ANSWER_THRESHOLD,
) -> EvalReport:
    """Score every judged (query, QA) row and fold into AUC + top-answer F1.

    AUC pools all rows; the per-row score comes from ranking the union of
    the retrieval candidates and the judged QAs, so judged pairs that
    retrieval misses still receive a model score instead of a free zero.
    """
    unknown = sorted({r.qa_id for r in rows if kb.get(r.qa_id) is None})
    if unknown:
        raise ValueError(f"labels reference unknown QA ids: {unknown}")

    index = build_index(kb)
    taxonomy = load_taxonomy()
    global_idf = load_global_idf()
    ctx = QueryContext()

    by_query: dict[str, list[LabelRow]] = {}
    for row in rows:
        by_query.setdefault(row.query, []).append(row)

    pooled_labels: list[int] = []
    pooled_scores: list[float] = []
    outcomes: list[QueryOutcome] = []
    for query, judged in by_query.items():
        stream = kb.tokenize_query(query)
        k = max(1, min(MAX_K, len(kb.qa_pairs)))
        candidates = {h.qa_id: h for h in retrieve(index, stream, k)}
        for row in judged:
            candidates.setdefault(row.qa_id, RetrievalHit(qa_id=row.qa_id, score=0.0))
        ranked = score_candidates(
            model, query, ctx, list(candidates.values()), kb, index, taxonomy, global_idf
        )
        scores = {a.qa_id: a.score for a in ranked}
        label_of = {row.qa_id: row.label for row in judged}
        for row in judged:
            pooled_labels.append(row.label)
            pooled_scores.append(scores[row.qa_id])

        top = ranked[0]
        answered = top.score >= threshold
        outcomes.append(
            QueryOutcome(
                query=query,
                answered=answered,
                top_relevant=answered and label_of.get(top.qa_id, 0) == 1,
                has_relevant=any(row.label == 1 for row in judged),
                top_qa_id=top.qa_id if answered else None,
                top_score=top.score,
            )
        )

    return EvalReport(
        auc=pairwise_auc(pooled_labels, pooled_scores),
        f1=top_answer_f1(outcomes),
        queries=len(by_query),
        rows=len(rows),
        threshold=threshold,
        outcomes=tuple(outcomes),
    )
