"""Self-hosted FAQ knowledge-base engine.

Turns FAQ documents into conversational knowledge bases: extraction to QA
pairs, fuzzy TF-IDF retrieval, GBDT re-ranking with contextual features,
persona chit-chat arbitration, and an active-learning suggestion loop,
served over a small REST API.
"""

__version__ = "0.1.0"

from .kb import (
    NO_ANSWER_TEXT,
    PERSONAS,
    KnowledgeBase,
    QAPair,
    QueryContext,
    RankedAnswer,
    parse_kb,
    serialize_kb,
    validate_kb,
)

__all__ = [
    "__version__",
    "NO_ANSWER_TEXT",
    "PERSONAS",
    "KnowledgeBase",
    "QAPair",
    "QueryContext",
    "RankedAnswer",
    "parse_kb",
    "serialize_kb",
    "validate_kb",
]
