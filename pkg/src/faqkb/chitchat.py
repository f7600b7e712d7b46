"""Small-talk answering and arbitration against knowledge-base answers.

A query is matched against a corpus of predefined intents by blending two
of the ranking similarities: letter-trigram cosine and term cosine. The
blend is compared with the knowledge base's top score under a margin that
biases toward KB answers, so small talk only wins when it clearly wins.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .features import semantic_similarity, semantic_vector, tfidf_feature
from .kb import PERSONAS
from .textpipe import TokenStream, normalize

CHITCHAT_PERSONAS = tuple(p for p in PERSONAS if p != "none")
DEFAULT_MARGIN = 0.1
INTENT_SCORE_FLOOR = 0.3

DATA_DIR = Path(__file__).resolve().parent / "data"
CORPUS_PATH = DATA_DIR / "chitchat-corpus.json"

# Small talk lives in function words ("how are you" is nothing but), so
# intent matching tokenizes without the stop list and with flat IDFs.
_NO_STOPWORDS: frozenset[str] = frozenset()
_UNIT_IDF: dict[str, float] = {}


def _chat_stream(text: str) -> TokenStream:
    return normalize(text, stopwords=_NO_STOPWORDS)


@dataclass(frozen=True)
class Intent:
    intent_id: str
    queries: tuple[str, ...]
    responses: Mapping[str, str]


@dataclass(frozen=True)
class ChitChatCorpus:
    intents: tuple[Intent, ...]

    def __len__(self) -> int:
        return len(self.intents)

    @cached_property
    def _query_table(self) -> tuple[tuple[Intent, np.ndarray, TokenStream], ...]:
        table = []
        for intent in self.intents:
            for query in intent.queries:
                table.append((intent, semantic_vector(query), _chat_stream(query)))
        return tuple(table)


@dataclass(frozen=True)
class DomainDecision:
    label: str  # "chitchat" or "kb"
    confidence: float


@dataclass(frozen=True)
class ChitChatReply:
    intent_id: str
    response: str
    score: float


def _validate_intent(raw: dict, seen: set[str]) -> Intent:
    intent_id = raw.get("intentId")
    if not intent_id or not isinstance(intent_id, str):
        raise ValueError("chitchat corpus: intent without an intentId")
    if intent_id in seen:
        raise ValueError(f"chitchat corpus: duplicate intentId {intent_id!r}")
    queries = raw.get("queries") or []
    if not isinstance(queries, list) or not queries:
        raise ValueError(f"chitchat corpus: intent {intent_id!r} has no queries")
    responses = raw.get("responses") or {}
    missing = [p for p in CHITCHAT_PERSONAS if not responses.get(p)]
    if missing:
        raise ValueError(
            f"chitchat corpus: intent {intent_id!r} missing responses for {missing}"
        )
    unknown = sorted(set(responses) - set(CHITCHAT_PERSONAS))
    if unknown:
        raise ValueError(
            f"chitchat corpus: intent {intent_id!r} has unknown personas {unknown}"
        )
    return Intent(
        intent_id=intent_id,
        queries=tuple(str(q) for q in queries),
        responses={p: str(responses[p]) for p in CHITCHAT_PERSONAS},
    )


def load_corpus(path: str | Path | None = None) -> ChitChatCorpus:
    """Load and validate an intent corpus from JSON."""
    source = Path(path) if path is not None else CORPUS_PATH
    doc = json.loads(source.read_text(encoding="utf-8"))
    raw_intents = doc.get("intents")
    if not isinstance(raw_intents, list):
        raise ValueError("chitchat corpus: top-level 'intents' list required")
    seen: set[str] = set()
    intents = []
    for raw in raw_intents:
        intent = _validate_intent(raw, seen)
        seen.add(intent.intent_id)
        intents.append(intent)
    return ChitChatCorpus(intents=tuple(intents))


@lru_cache(maxsize=1)
def default_corpus() -> ChitChatCorpus:
    return load_corpus()


def empty_corpus() -> ChitChatCorpus:
    """Corpus that matches nothing; used when the KB persona is none."""
    return ChitChatCorpus(intents=())


def best_intent(query: str, corpus: ChitChatCorpus) -> tuple[float, Intent | None]:
    """Best-scoring intent under the 50/50 trigram/term blend.

    Ties go to the lexicographically smaller intentId so arbitration is
    deterministic regardless of corpus file order.
    """
    query_vec = semantic_vector(query)
    query_stream = _chat_stream(query)
    best_score = 0.0
    best: Intent | None = None
    for intent, vec, stream in corpus._query_table:
        sem = semantic_similarity(query_vec, vec)
        tfidf = tfidf_feature(query_stream, stream, _UNIT_IDF, _UNIT_IDF)
        blended = 0.5 * sem + 0.5 * tfidf
        if blended > best_score or (
            blended == best_score and best is not None and intent.intent_id < best.intent_id
        ):
            best_score = blended
            best = intent
    return best_score, best


def classify_domain(
    query: str,
    kb_top_score: float,
    corpus: ChitChatCorpus,
    margin: float = DEFAULT_MARGIN,
) -> DomainDecision:
    """Decide whether a query is small talk or a knowledge-base question."""
    chit_top, _ = best_intent(query, corpus)
    if chit_top > kb_top_score + margin:
        label = "chitchat"
    else:
        label = "kb"
    confidence = min(1.0, abs(chit_top - kb_top_score))
    return DomainDecision(label=label, confidence=confidence)


def chitchat_answer(
    query: str,
    persona: str,
    corpus: ChitChatCorpus,
    floor: float = INTENT_SCORE_FLOOR,
) -> ChitChatReply | None:
    """Persona response for the best-matching intent.

    Returns None when no intent clears the floor, in which case the caller
    should fall back to the knowledge-base path and its no-answer handling.
    Intent selection ignores the persona; only the response text varies.
    """
    if persona not in CHITCHAT_PERSONAS:
        raise ValueError(
            f"unknown persona {persona!r}; expected one of {CHITCHAT_PERSONAS}"
        )
    score, intent = best_intent(query, corpus)
    if intent is None or score < floor:
        return None
    return ChitChatReply(
        intent_id=intent.intent_id,
        response=intent.responses[persona],
        score=score,
    )
