"""Inverted-index retrieval layer: weighted TF-IDF with fuzzy expansion.

The index is immutable once built; the service swaps whole snapshots on
KB mutation. Scoring is the exact formula pinned by the tests:

    score(qa) = sum over query lemmas t of fieldWeight * tf(t, qa, field) * localIdf(t)

with out-of-vocabulary query lemmas expanded to every vocabulary lemma
within the spell-correction edit bound, contributing at half weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .kb import KnowledgeBase
from .textpipe import TokenStream, damerau_levenshtein, edit_distance_bound

FIELDS = ("question", "alternate", "answer")
FIELD_WEIGHTS = {"question": 2.0, "alternate": 2.0, "answer": 1.0}
FUZZY_DISCOUNT = 0.5
MAX_K = 100


@dataclass(frozen=True)
class Posting:
    qa_id: int
    field: str
    tf: int


@dataclass(frozen=True)
class RetrievalHit:
    qa_id: int
    score: float


@dataclass(frozen=True)
class InvertedIndex:
    postings: Mapping[str, tuple[Posting, ...]]
    doc_lengths: Mapping[int, int]
    vocabulary: frozenset[str]
    local_idf: Mapping[str, float]
    qa_ids: frozenset[int]

    def size(self) -> int:
        return len(self.qa_ids)


def build_index(kb: KnowledgeBase) -> InvertedIndex:
    if not kb.qa_pairs:
        raise ValueError("cannot index an empty knowledge base")
    field_order = {f: i for i, f in enumerate(FIELDS)}
    counts: dict[str, dict[tuple[int, str], int]] = {}
    doc_lengths: dict[int, int] = {}
    for qa in kb.qa_pairs:
        total = 0
        per_field = {
            "question": [qa.question],
            "alternate": list(qa.alternate_questions),
            "answer": [qa.answer],
        }
        for fname, texts in per_field.items():
            for text in texts:
                for lemma in kb.tokenize(text).lemmas:
                    counts.setdefault(lemma, {})
                    key = (qa.id, fname)
                    counts[lemma][key] = counts[lemma].get(key, 0) + 1
                    total += 1
        doc_lengths[qa.id] = total

    postings = {
        lemma: tuple(
            Posting(qa_id=qa_id, field=fname, tf=tf)
            for (qa_id, fname), tf in sorted(
                entries.items(), key=lambda kv: (kv[0][0], field_order[kv[0][1]])
            )
        )
        for lemma, entries in counts.items()
    }
    return InvertedIndex(
        postings=postings,
        doc_lengths=doc_lengths,
        vocabulary=frozenset(postings),
        local_idf=dict(kb.local_idf),
        qa_ids=frozenset(qa.id for qa in kb.qa_pairs),
    )


def fuzzy_expand(lemma: str, vocabulary: frozenset[str]) -> list[str]:
    """Vocabulary lemmas within the edit bound of an out-of-vocabulary lemma."""
    bound = edit_distance_bound(lemma)
    matches = [
        v
        for v in vocabulary
        if abs(len(v) - len(lemma)) <= bound
        and damerau_levenshtein(lemma, v, cap=bound) <= bound
    ]
    return sorted(matches)


def retrieve(index: InvertedIndex, query: TokenStream, k: int) -> list[RetrievalHit]:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in [1, {MAX_K}], got {k}")
    scores: dict[int, float] = {}

    def add(lemma: str, scale: float) -> None:
        idf = index.local_idf.get(lemma)
        if idf is None:
            return
        for p in index.postings.get(lemma, ()):
            scores[p.qa_id] = scores.get(p.qa_id, 0.0) + scale * (
                FIELD_WEIGHTS[p.field] * p.tf * idf
            )

    for token in query.tokens:
        if token.lemma in index.vocabulary:
            add(token.lemma, 1.0)
        else:
            for expanded in fuzzy_expand(token.lemma, index.vocabulary):
                add(expanded, FUZZY_DISCOUNT)

    hits = [RetrievalHit(qa_id=qa_id, score=s) for qa_id, s in scores.items() if s > 0.0]
    hits.sort(key=lambda h: (-h.score, h.qa_id))
    return hits[:k]
