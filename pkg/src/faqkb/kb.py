"""Core domain types: QA pairs, knowledge-base snapshots, query context.

A KnowledgeBase is an immutable snapshot. Every mutation builds a new
snapshot via :meth:`KnowledgeBase.build` (or the ``with_*`` helpers),
which recomputes the local IDF table and vocabulary so they can never go
stale relative to the QA pairs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from . import textpipe
from .textpipe import TokenStream

PERSONAS = ("none", "professional", "witty", "friendly", "caring", "enthusiastic")

NO_ANSWER_TEXT = "No good match found in the knowledge base."


@dataclass(frozen=True)
class QAPair:
    id: int
    question: str
    answer: str
    alternate_questions: tuple[str, ...] = ()
    parent_id: int | None = None
    source: str = "editorial"
    metadata: tuple[tuple[str, str], ...] = ()

    def all_questions(self) -> list[str]:
        return [self.question, *self.alternate_questions]


@dataclass(frozen=True)
class QueryContext:
    previous_qa_id: int | None = None
    previous_user_query: str | None = None
    previous_answer: str | None = None

    @property
    def empty(self) -> bool:
        return (
            self.previous_qa_id is None
            and self.previous_user_query is None
            and self.previous_answer is None
        )


@dataclass(frozen=True)
class RankedAnswer:
    """One re-ranked result; ``qa_id`` is None for the no-answer sentinel."""

    qa_id: int | None
    score: float
    answer_text: str
    features: "object | None" = None  # FeatureVector; untyped to avoid an import cycle
    retrieval_score: float = 0.0


@dataclass(frozen=True)
class KnowledgeBase:
    kb_id: str
    name: str
    qa_pairs: tuple[QAPair, ...]
    synonyms: tuple[frozenset[str], ...] = ()
    persona: str = "none"
    local_idf: Mapping[str, float] = field(default_factory=dict)
    vocabulary: frozenset[str] = frozenset()
    term_freq: Mapping[str, int] = field(default_factory=dict)

    @staticmethod
    def build(
        kb_id: str,
        name: str,
        qa_pairs: Sequence[QAPair],
        synonyms: Sequence[Iterable[str]] = (),
        persona: str = "none",
    ) -> "KnowledgeBase":
        if persona not in PERSONAS:
            raise ValueError(f"unknown persona {persona!r}; expected one of {PERSONAS}")
        syn_sets = tuple(frozenset(w.lower() for w in group) for group in synonyms)
        kb = KnowledgeBase(
            kb_id=kb_id,
            name=name,
            qa_pairs=tuple(qa_pairs),
            synonyms=syn_sets,
            persona=persona,
        )
        if not kb.qa_pairs:
            return kb
        idf = recompute_local_idf(kb)
        tf: dict[str, int] = {}
        for qa in kb.qa_pairs:
            for text in [qa.question, *qa.alternate_questions, qa.answer]:
                for lemma in kb.tokenize(text).lemmas:
                    tf[lemma] = tf.get(lemma, 0) + 1
        return replace(kb, local_idf=idf, vocabulary=frozenset(idf), term_freq=tf)

    def with_qa_pairs(self, qa_pairs: Sequence[QAPair]) -> "KnowledgeBase":
        return KnowledgeBase.build(self.kb_id, self.name, qa_pairs, self.synonyms, self.persona)

    def with_persona(self, persona: str) -> "KnowledgeBase":
        return KnowledgeBase.build(self.kb_id, self.name, self.qa_pairs, self.synonyms, persona)

    def with_synonyms(self, synonyms: Sequence[Iterable[str]]) -> "KnowledgeBase":
        return KnowledgeBase.build(self.kb_id, self.name, self.qa_pairs, synonyms, self.persona)

    def get(self, qa_id: int) -> QAPair | None:
        for qa in self.qa_pairs:
            if qa.id == qa_id:
                return qa
        return None

    def next_id(self) -> int:
        return max((qa.id for qa in self.qa_pairs), default=0) + 1

    def _synonym_map(self) -> dict[str, str]:
        mapping: dict[str, str] = {}
        for group in self.synonyms:
            if not group:
                continue
            rep = min(group)
            for word in group:
                mapping[word] = rep
        return mapping

    def _apply_synonyms(self, stream: TokenStream) -> TokenStream:
        mapping = self._synonym_map()
        if not mapping:
            return stream
        tokens = tuple(
            replace(tok, lemma=mapping.get(tok.lemma, tok.lemma)) for tok in stream.tokens
        )
        return TokenStream(original=stream.original, tokens=tokens)

    def tokenize(self, text: str) -> TokenStream:
        """Tokenize KB content: no spell correction (the KB defines the vocabulary)."""
        return self._apply_synonyms(textpipe.normalize(text))

    def tokenize_query(self, text: str) -> TokenStream:
        """Tokenize a user query: synonym-fold first, then spell-correct leftovers."""
        stream = self._apply_synonyms(textpipe.normalize(text))
        if not self.vocabulary:
            return stream
        tokens = []
        for tok in stream.tokens:
            lemma = tok.lemma
            if lemma not in self.vocabulary:
                lemma = textpipe.spell_correct(lemma, self.vocabulary, self.term_freq)
            tokens.append(replace(tok, lemma=lemma))
        return TokenStream(original=stream.original, tokens=tuple(tokens))


def recompute_local_idf(kb: KnowledgeBase) -> dict[str, float]:
    """Smoothed IDF over QA pairs: ln((N+1)/(df+1)) + 1, always positive.

    A token counts toward df once per QA pair, whether it appears in the
    question, an alternate, or the answer.
    """
    if not kb.qa_pairs:
        raise ValueError("empty knowledge base")
    n = len(kb.qa_pairs)
    df: dict[str, int] = {}
    for qa in kb.qa_pairs:
        seen: set[str] = set()
        for text in [qa.question, *qa.alternate_questions, qa.answer]:
            seen.update(kb.tokenize(text).lemmas)
        for lemma in seen:
            df[lemma] = df.get(lemma, 0) + 1
    return {t: math.log((n + 1) / (d + 1)) + 1.0 for t, d in df.items()}


def validate_kb(kb: KnowledgeBase) -> list[str]:
    """Check every type invariant; returns violation descriptions, never raises."""
    violations: list[str] = []
    by_id: dict[int, QAPair] = {}
    for qa in kb.qa_pairs:
        if qa.id in by_id:
            violations.append(f"QAPair {qa.id}: duplicate id")
        else:
            by_id[qa.id] = qa
        if qa.id <= 0:
            violations.append(f"QAPair {qa.id}: id must be a positive integer")
        if not qa.question.strip():
            violations.append(f"QAPair {qa.id}: empty question")
        if not qa.answer.strip():
            violations.append(f"QAPair {qa.id}: empty answer")
        canonical = qa.question.strip().lower()
        for alt in qa.alternate_questions:
            if alt.strip().lower() == canonical:
                violations.append(f"QAPair {qa.id}: alternate duplicates canonical question")

    for qa in kb.qa_pairs:
        if qa.parent_id is not None and qa.parent_id not in by_id:
            violations.append(f"QAPair {qa.id}: dangling parentId {qa.parent_id}")

    # Cycle detection over the parent graph; every member of a cycle is reported.
    # The parent graph has out-degree <= 1, so walking upward from each node
    # either terminates, reaches an already-classified node, or loops.
    on_cycle: set[int] = set()
    settled: set[int] = set()
    for start in by_id:
        if start in settled:
            continue
        path: list[int] = []
        seen_at: dict[int, int] = {}
        node: int | None = start
        while node is not None and node in by_id and node not in settled and node not in seen_at:
            seen_at[node] = len(path)
            path.append(node)
            node = by_id[node].parent_id
        if node is not None and node in seen_at:
            on_cycle.update(path[seen_at[node]:])
        settled.update(path)
    for qa_id in sorted(on_cycle):
        violations.append(f"QAPair {qa_id}: parentId cycle")

    if kb.qa_pairs:
        expected = recompute_local_idf(kb)
        if dict(kb.local_idf) != expected:
            violations.append("KnowledgeBase: stale localIdf (recompute does not match)")
    return violations


# --- KB interchange file ---------------------------------------------------

_KB_FIELDS = {"kbId", "name", "persona", "synonyms", "qaPairs"}
_QA_FIELDS = {"id", "question", "alternateQuestions", "answer", "parentId", "source", "metadata"}


def serialize_kb(kb: KnowledgeBase) -> str:
    doc = {
        "kbId": kb.kb_id,
        "name": kb.name,
        "persona": kb.persona,
        "synonyms": [sorted(group) for group in kb.synonyms],
        "qaPairs": [
            {
                "id": qa.id,
                "question": qa.question,
                "alternateQuestions": list(qa.alternate_questions),
                "answer": qa.answer,
                "parentId": qa.parent_id,
                "source": qa.source,
                "metadata": [{"key": k, "value": v} for k, v in qa.metadata],
            }
            for qa in kb.qa_pairs
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _require(doc: dict, key: str, kind: type, where: str):
    if key not in doc:
        raise ValueError(f"{where}: missing field '{key}'")
    value = doc[key]
    if not isinstance(value, kind):
        raise ValueError(f"{where}: field '{key}' must be {kind.__name__}")
    return value


def parse_kb(text: str) -> KnowledgeBase:
    """Parse the KB interchange JSON; unknown fields are rejected by name."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("KB file must be a JSON object")
    for key in doc:
        if key not in _KB_FIELDS:
            raise ValueError(f"unknown field '{key}'")
    kb_id = _require(doc, "kbId", str, "KB")
    name = _require(doc, "name", str, "KB")
    persona = _require(doc, "persona", str, "KB")
    synonyms = _require(doc, "synonyms", list, "KB")
    raw_pairs = _require(doc, "qaPairs", list, "KB")

    qa_pairs = []
    for i, raw in enumerate(raw_pairs):
        where = f"qaPairs[{i}]"
        if not isinstance(raw, dict):
            raise ValueError(f"{where}: must be an object")
        for key in raw:
            if key not in _QA_FIELDS:
                raise ValueError(f"{where}: unknown field '{key}'")
        qa_id = _require(raw, "id", int, where)
        question = _require(raw, "question", str, where)
        answer = _require(raw, "answer", str, where)
        alts = _require(raw, "alternateQuestions", list, where)
        if "parentId" not in raw:
            raise ValueError(f"{where}: missing field 'parentId'")
        parent_id = raw["parentId"]
        if parent_id is not None and not isinstance(parent_id, int):
            raise ValueError(f"{where}: field 'parentId' must be an integer or null")
        source = _require(raw, "source", str, where)
        metadata_raw = _require(raw, "metadata", list, where)
        metadata = []
        for entry in metadata_raw:
            if not isinstance(entry, dict) or set(entry) != {"key", "value"}:
                raise ValueError(f"{where}: metadata entries must be {{key, value}} objects")
            metadata.append((str(entry["key"]), str(entry["value"])))
        qa_pairs.append(
            QAPair(
                id=qa_id,
                question=question,
                answer=answer,
                alternate_questions=tuple(str(a) for a in alts),
                parent_id=parent_id,
                source=source,
                metadata=tuple(metadata),
            )
        )
    return KnowledgeBase.build(kb_id, name, qa_pairs, synonyms=synonyms, persona=persona)
