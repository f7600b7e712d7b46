"""Feature families consumed by the answer ranker.

Three lexical similarity signals (taxonomy path similarity, hashed
letter-trigram cosine, IDF-weighted bag-of-lemma cosine), each computed
against the candidate's question and answer, plus the normalized
retrieval score and contextual copies of the six base features on the
context-expanded query/candidate pair.
"""

from __future__ import annotations

import hashlib
import math
import re
import statistics
from collections import Counter, deque
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .index import MAX_K, InvertedIndex, retrieve
from .kb import KnowledgeBase, QAPair, QueryContext
from .textpipe import TokenStream

DATA_DIR = Path(__file__).parent / "data"
TAXONOMY_PATH = DATA_DIR / "taxonomy.tsv"
GLOBAL_IDF_PATH = DATA_DIR / "global-idf.tsv"

SEMANTIC_DIM = 4096

FEATURE_NAMES = (
    "wnQ",
    "wnA",
    "semQ",
    "semA",
    "tfidfQ",
    "tfidfA",
    "retrievalScore",
    "wnQc",
    "wnAc",
    "semQc",
    "semAc",
    "tfidfQc",
    "tfidfAc",
)


@dataclass(frozen=True)
class FeatureVector:
    wnQ: float
    wnA: float
    semQ: float
    semA: float
    tfidfQ: float
    tfidfA: float
    retrievalScore: float
    wnQc: float
    wnAc: float
    semQc: float
    semAc: float
    tfidfQc: float
    tfidfAc: float

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, n) for n in FEATURE_NAMES], dtype=np.float64)

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "FeatureVector":
        if len(values) != len(FEATURE_NAMES):
            raise ValueError(f"expected {len(FEATURE_NAMES)} features, got {len(values)}")
        return cls(**{n: float(v) for n, v in zip(FEATURE_NAMES, values)})


assert tuple(f.name for f in fields(FeatureVector)) == FEATURE_NAMES


# ---------------------------------------------------------------------------
# Taxonomy


@dataclass(frozen=True)
class Taxonomy:
    """Word-level is-a graph. Edges point from a word to its hypernyms.

    ancestors maps each word to {ancestor: shortest hop count}, the word
    itself included at distance 0. depths holds 1 + shortest distance to
    any root, so roots sit at depth 1.
    """

    edges: Mapping[str, tuple[str, ...]]
    roots: frozenset[str]
    ancestors: Mapping[str, Mapping[str, int]]
    depths: Mapping[str, int]

    def __contains__(self, word: str) -> bool:
        return word in self.ancestors


def _build_taxonomy(edges: Mapping[str, tuple[str, ...]]) -> Taxonomy:
    nodes = set(edges)
    for parents in edges.values():
        nodes.update(parents)
    roots = frozenset(n for n in nodes if not edges.get(n))
    if not roots:
        raise ValueError("taxonomy has no root (every word has a hypernym)")

    # Kahn's algorithm doubles as the cycle check
    indegree = {n: 0 for n in nodes}
    for parents in edges.values():
        for p in parents:
            indegree[p] += 1
    queue = deque(n for n, d in indegree.items() if d == 0)
    seen = 0
    while queue:
        n = queue.popleft()
        seen += 1
        for p in edges.get(n, ()):
            indegree[p] -= 1
            if indegree[p] == 0:
                queue.append(p)
    if seen != len(nodes):
        cyclic = sorted(n for n, d in indegree.items() if d > 0)
        raise ValueError(f"taxonomy contains a hypernym cycle involving: {', '.join(cyclic[:5])}")

    ancestors: dict[str, dict[str, int]] = {}
    for word in nodes:
        dist = {word: 0}
        frontier = deque([word])
        while frontier:
            cur = frontier.popleft()
            for parent in edges.get(cur, ()):
                if parent not in dist:
                    dist[parent] = dist[cur] + 1
                    frontier.append(parent)
        ancestors[word] = dist

    depths = {}
    for word, dist in ancestors.items():
        to_root = [d for r, d in dist.items() if r in roots]
        if not to_root:
            raise ValueError(f"taxonomy word {word!r} reaches no root")
        depths[word] = 1 + min(to_root)
    return Taxonomy(edges=dict(edges), roots=roots, ancestors=ancestors, depths=depths)


def taxonomy_from_edges(pairs: Sequence[tuple[str, str]]) -> Taxonomy:
    edges: dict[str, tuple[str, ...]] = {}
    for word, hypernym in pairs:
        current = edges.get(word, ())
        if hypernym not in current:
            edges[word] = current + (hypernym,)
    return _build_taxonomy(edges)


def load_taxonomy(path: str | Path | None = None) -> Taxonomy:
    path = Path(path) if path is not None else TAXONOMY_PATH
    pairs = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path.name}:{lineno}: expected 'word<TAB>hypernym', got {line!r}")
        pairs.append((parts[0], parts[1]))
    return taxonomy_from_edges(pairs)


def taxonomy_fingerprint(path: str | Path | None = None) -> str:
    path = Path(path) if path is not None else TAXONOMY_PATH
    return hashlib.sha256(path.read_bytes()).hexdigest()


def taxonomy_word_sim(w1: str, w2: str, tax: Taxonomy) -> float:
    """Path similarity through the best common hypernym, in [0, 1]."""
    if w1 == w2:
        return 1.0
    a1 = tax.ancestors.get(w1)
    a2 = tax.ancestors.get(w2)
    if not a1 or not a2:
        return 0.0
    best = 0.0
    for anc, d1 in a1.items():
        d2 = a2.get(anc)
        if d2 is None:
            continue
        depth = tax.depths[anc]
        sim = depth / (depth + d1 + d2)
        if sim > best:
            best = sim
    return best


# ---------------------------------------------------------------------------
# IDF tables


class GlobalIdf:
    """Corpus-level word rarity. Words outside the table get the median."""

    def __init__(self, table: Mapping[str, float]):
        self._table = dict(table)
        self.default = statistics.median(self._table.values()) if self._table else 1.0

    def get(self, token: str) -> float | None:
        return self._table.get(token)

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, token: str) -> bool:
        return token in self._table


def load_global_idf(path: str | Path | None = None) -> GlobalIdf:
    path = Path(path) if path is not None else GLOBAL_IDF_PATH
    table = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path.name}:{lineno}: expected 'word<TAB>idf', got {line!r}")
        table[parts[0]] = float(parts[1])
    return GlobalIdf(table)


def _idf(table, token: str) -> float:
    # Plain dicts fall back to 1.0; GlobalIdf carries its own default.
    value = table.get(token)
    if value is not None:
        return value
    return getattr(table, "default", 1.0)


# ---------------------------------------------------------------------------
# Feature families


def wordnet_feature(query: TokenStream, target: TokenStream, tax: Taxonomy, local_idf, global_idf) -> float:
    q_lemmas = query.lemmas
    t_lemmas = target.lemmas
    if not q_lemmas or not t_lemmas:
        return 0.0
    num = 0.0
    den = 0.0
    for q in q_lemmas:
        weight = _idf(local_idf, q) * _idf(global_idf, q)
        num += weight * max(taxonomy_word_sim(q, t, tax) for t in t_lemmas)
        den += weight
    if den <= 0.0:
        return 0.0
    return num / den


_LIGHT_WORD_RE = re.compile(r"[a-z0-9]+")

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_FNV_MASK = 0xFFFFFFFFFFFFFFFF


def _fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & _FNV_MASK
    return h


def semantic_vector(text: str) -> np.ndarray:
    """Letter-trigram hash embedding; L2-normalized unless text is empty.

    Uses its own light tokenizer (no stop-word removal) so chit-chat
    texts like "what's up" keep their mass.
    """
    vec = np.zeros(SEMANTIC_DIM, dtype=np.float64)
    folded = text.lower().replace("'", "").replace("’", "")
    for token in _LIGHT_WORD_RE.findall(folded):
        padded = f"#{token}#"
        for i in range(len(padded) - 2):
            vec[_fnv1a64(padded[i : i + 3].encode("utf-8")) % SEMANTIC_DIM] += 1.0
    norm = float(np.linalg.norm(vec))
    if norm > 0.0:
        vec /= norm
    return vec


def semantic_similarity(v1: np.ndarray, v2: np.ndarray) -> float:
    if v1.shape != (SEMANTIC_DIM,) or v2.shape != (SEMANTIC_DIM,):
        raise ValueError(f"semantic vectors must have dimension {SEMANTIC_DIM}")
    n1 = float(np.linalg.norm(v1))
    n2 = float(np.linalg.norm(v2))
    if n1 == 0.0 or n2 == 0.0:
        return 0.0
    return float(np.dot(v1, v2) / (n1 * n2))


def tfidf_feature(query: TokenStream, target: TokenStream, local_idf, global_idf) -> float:
    def weigh(stream: TokenStream) -> dict[str, float]:
        return {
            lemma: count * _idf(local_idf, lemma) * _idf(global_idf, lemma)
            for lemma, count in Counter(stream.lemmas).items()
        }

    a = weigh(query)
    b = weigh(target)
    dot = sum(a[t] * b[t] for t in a.keys() & b.keys())
    norm_a = math.sqrt(sum(v * v for v in a.values()))
    norm_b = math.sqrt(sum(v * v for v in b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)


# ---------------------------------------------------------------------------
# Contextual expansion


@dataclass(frozen=True)
class ExpandedPair:
    modified_query: str
    modified_candidate: QAPair


def contextual_expand(query: str, ctx: QueryContext, candidate: QAPair, kb: KnowledgeBase) -> ExpandedPair:
    """Fold the previous answer into the query and the parent QA into the candidate."""
    modified_query = query
    if ctx.previous_answer:
        modified_query = f"{ctx.previous_answer} {query}"

    modified_candidate = candidate
    if candidate.parent_id is not None:
        parent = next((qa for qa in kb.qa_pairs if qa.id == candidate.parent_id), None)
        if parent is None:
            raise ValueError(f"QAPair {candidate.id}: dangling parentId {candidate.parent_id}")
        modified_candidate = replace(
            candidate,
            question=f"{parent.question} {candidate.question}",
            answer=f"{parent.answer} {candidate.answer}",
            alternate_questions=tuple(
                f"{parent.question} {alt}" for alt in candidate.alternate_questions
            ),
        )
    return ExpandedPair(modified_query=modified_query, modified_candidate=modified_candidate)


# ---------------------------------------------------------------------------
# Full feature vector


class FeatureExtractor:
    """Per-query feature computation with shared tokenization/vector caches.

    Built once per incoming query; featurize() is then cheap per candidate.
    When the context carries a previous answer, retrieval runs on the
    expanded query so follow-ups like a bare "yes" still hit the index.
    """

    def __init__(
        self,
        kb: KnowledgeBase,
        index: InvertedIndex,
        taxonomy: Taxonomy,
        global_idf,
        query: str,
        ctx: QueryContext | None = None,
    ):
        self.kb = kb
        self.index = index
        self.taxonomy = taxonomy
        self.global_idf = global_idf
        self.query = query
        self.ctx = ctx if ctx is not None else QueryContext()

        self._streams: dict[str, TokenStream] = {}
        self._vectors: dict[str, np.ndarray] = {}

        self.query_stream = kb.tokenize_query(query)
        self.query_vec = semantic_vector(query)
        if self.ctx.previous_answer:
            self.modified_query = f"{self.ctx.previous_answer} {query}"
        else:
            self.modified_query = query
        self.modified_stream = kb.tokenize_query(self.modified_query)
        self.modified_vec = semantic_vector(self.modified_query)

        retrieval_stream = self.modified_stream if self.ctx.previous_answer else self.query_stream
        k = max(1, min(MAX_K, index.size()))
        hits = retrieve(index, retrieval_stream, k)
        self.raw_scores = {h.qa_id: h.score for h in hits}
        self.top_raw_score = hits[0].score if hits else 0.0

    def _stream(self, text: str) -> TokenStream:
        cached = self._streams.get(text)
        if cached is None:
            cached = self.kb.tokenize(text)
            self._streams[text] = cached
        return cached

    def _vector(self, text: str) -> np.ndarray:
        cached = self._vectors.get(text)
        if cached is None:
            cached = semantic_vector(text)
            self._vectors[text] = cached
        return cached

    def _side_features(
        self, q_stream: TokenStream, q_vec: np.ndarray, questions: Sequence[str], answer: str
    ) -> tuple[float, float, float, float, float, float]:
        local = self.kb.local_idf
        wn_q = max(
            wordnet_feature(q_stream, self._stream(q), self.taxonomy, local, self.global_idf)
            for q in questions
        )
        sem_q = max(semantic_similarity(q_vec, self._vector(q)) for q in questions)
        tfidf_q = max(
            tfidf_feature(q_stream, self._stream(q), local, self.global_idf) for q in questions
        )
        wn_a = wordnet_feature(q_stream, self._stream(answer), self.taxonomy, local, self.global_idf)
        sem_a = semantic_similarity(q_vec, self._vector(answer))
        tfidf_a = tfidf_feature(q_stream, self._stream(answer), local, self.global_idf)
        return wn_q, wn_a, sem_q, sem_a, tfidf_q, tfidf_a

    def featurize(self, candidate: QAPair) -> FeatureVector:
        base = self._side_features(
            self.query_stream, self.query_vec, candidate.all_questions(), candidate.answer
        )
        expanded = contextual_expand(self.query, self.ctx, candidate, self.kb)
        ctx_candidate = expanded.modified_candidate
        contextual = self._side_features(
            self.modified_stream,
            self.modified_vec,
            ctx_candidate.all_questions(),
            ctx_candidate.answer,
        )
        if self.top_raw_score > 0.0:
            retrieval = self.raw_scores.get(candidate.id, 0.0) / self.top_raw_score
        else:
            retrieval = 0.0
        return FeatureVector(
            wnQ=base[0],
            wnA=base[1],
            semQ=base[2],
            semA=base[3],
            tfidfQ=base[4],
            tfidfA=base[5],
            retrievalScore=retrieval,
            wnQc=contextual[0],
            wnAc=contextual[1],
            semQc=contextual[2],
            semAc=contextual[3],
            tfidfQc=contextual[4],
            tfidfAc=contextual[5],
        )


def featurize(
    query: str,
    ctx: QueryContext,
    candidate: QAPair,
    kb: KnowledgeBase,
    index: InvertedIndex,
    taxonomy: Taxonomy,
    global_idf,
) -> FeatureVector:
    return FeatureExtractor(kb, index, taxonomy, global_idf, query, ctx).featurize(candidate)
