"""HTTP service: KB management, answering, feedback, and suggestion review.

One process, one data directory. Each KB lives in its own subdirectory
(kb.json, revision, suggestions.jsonl, feedback.jsonl, optional
model-overlay.json) and is served from an immutable in-memory snapshot.
Mutations are serialized per KB behind a lock and become visible by
swapping the snapshot reference, so a query never observes a half-updated
KB. Files are written to a temp name and renamed into place so a crash
never leaves a torn file behind.
"""

from __future__ import annotations

import json
import os
import shutil
import threading
import time
import uuid
from dataclasses import dataclass, replace
from pathlib import Path

from fastapi import Body, FastAPI, Header, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, RedirectResponse, Response
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import active_learning as al
from .chitchat import ChitChatCorpus, chitchat_answer, classify_domain, default_corpus
from .extraction import extract_paths
from .features import FEATURE_NAMES, load_global_idf, load_taxonomy
from .index import MAX_K, InvertedIndex, build_index, retrieve
from .kb import (
    PERSONAS,
    KnowledgeBase,
    QAPair,
    QueryContext,
    RankedAnswer,
    parse_kb,
    serialize_kb,
    validate_kb,
)
from .ranker import (
    DEFAULT_NO_ANSWER_THRESHOLD,
    GbdtModel,
    load_default_model,
    load_model,
    rank,
)


class ApiError(Exception):
    """Error that maps onto the wire shape {code, message, details[]}."""

    def __init__(self, status: int, code: str, message: str, details: list[str] | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details or []

    def body(self) -> dict:
        return {"code": self.code, "message": self.message, "details": self.details}


@dataclass
class ServiceConfig:
    data_dir: Path
    no_answer_threshold: float = DEFAULT_NO_ANSWER_THRESHOLD
    disagreement_margin: float = al.DISAGREEMENT_MARGIN
    score_band: float = al.SCORE_BAND
    dbscan_eps: float = al.DBSCAN_EPS
    dbscan_min_pts: int = al.DBSCAN_MIN_PTS
    model_path: Path | None = None
    max_top: int = 10
    active_learning: bool = True

    def __post_init__(self):
        self.data_dir = Path(self.data_dir)
        if not 0.0 <= self.no_answer_threshold <= 1.0:
            raise ValueError("no_answer_threshold must be within [0, 1]")
        if self.dbscan_eps <= 0:
            raise ValueError("dbscan_eps must be positive")
        if self.dbscan_min_pts < 1:
            raise ValueError("dbscan_min_pts must be at least 1")
        if self.max_top < 1:
            raise ValueError("max_top must be at least 1")


@dataclass(frozen=True)
class KbState:
    """Immutable per-KB snapshot; the store swaps whole instances."""

    kb: KnowledgeBase
    index: InvertedIndex
    revision: int
    suggestions: tuple[al.Suggestion, ...] = ()
    model: GbdtModel | None = None  # per-KB overlay; None means the shared default


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _str_field(doc: dict, key: str, where: str, required: bool = True, default: str = "") -> str:
    if key not in doc:
        if required:
            raise ApiError(400, "bad_request", f"{where}: missing field {key!r}")
        return default
    value = doc[key]
    if not isinstance(value, str):
        raise ApiError(400, "bad_request", f"{where}: field {key!r} must be a string")
    return value


def _qa_from_doc(doc: dict, qa_id: int, where: str) -> QAPair:
    if not isinstance(doc, dict):
        raise ApiError(400, "bad_request", f"{where}: QA entry must be an object")
    allowed = {"question", "answer", "alternateQuestions", "parentId", "source", "metadata"}
    unknown = set(doc) - allowed - {"id"}
    if unknown:
        raise ApiError(400, "bad_request", f"{where}: unknown fields {sorted(unknown)}")
    question = _str_field(doc, "question", where)
    answer = _str_field(doc, "answer", where)
    alternates = doc.get("alternateQuestions", [])
    if not isinstance(alternates, list) or any(not isinstance(a, str) for a in alternates):
        raise ApiError(400, "bad_request", f"{where}: alternateQuestions must be a list of strings")
    parent = doc.get("parentId")
    if parent is not None and not isinstance(parent, int):
        raise ApiError(400, "bad_request", f"{where}: parentId must be an integer or null")
    metadata = doc.get("metadata", [])
    if not isinstance(metadata, list):
        raise ApiError(400, "bad_request", f"{where}: metadata must be a list")
    pairs = []
    for entry in metadata:
        if not isinstance(entry, dict) or set(entry) != {"key", "value"}:
            raise ApiError(400, "bad_request", f"{where}: metadata entries need key and value")
        pairs.append((str(entry["key"]), str(entry["value"])))
    return QAPair(
        id=qa_id,
        question=question,
        answer=answer,
        alternate_questions=tuple(alternates),
        parent_id=parent,
        source=str(doc.get("source", "editorial")),
        metadata=tuple(pairs),
    )


def _qa_to_doc(qa: QAPair) -> dict:
    return {
        "id": qa.id,
        "question": qa.question,
        "alternateQuestions": list(qa.alternate_questions),
        "answer": qa.answer,
        "parentId": qa.parent_id,
        "source": qa.source,
        "metadata": [{"key": k, "value": v} for k, v in qa.metadata],
    }


def _answer_to_doc(answer: RankedAnswer, kind: str) -> dict:
    features = None
    if answer.features is not None:
        features = {
            name: float(value)
            for name, value in zip(FEATURE_NAMES, answer.features.as_array())
        }
    return {
        "qaId": answer.qa_id,
        "answer": answer.answer_text,
        "score": float(answer.score),
        "retrievalScore": float(answer.retrieval_score),
        "kind": kind,
        "features": features,
    }


def answer_pipeline(
    kb: KnowledgeBase,
    index: InvertedIndex,
    model: GbdtModel,
    taxonomy,
    global_idf,
    chat_corpus: ChitChatCorpus,
    question: str,
    ctx: QueryContext,
    threshold: float = DEFAULT_NO_ANSWER_THRESHOLD,
) -> tuple[list[RankedAnswer], str]:
    """Full answering pipeline; returns (ranked answers, kind of the top).

    Kind is "kb", "chitchat", or "noanswer". Arbitration compares calibrated
    ranker scores against the chit-chat blend, so it runs after ranking; the
    no-answer sentinel keeps the losing top score for that comparison.
    """
    stream_text = f"{ctx.previous_answer} {question}" if ctx.previous_answer else question
    tokens = kb.tokenize_query(stream_text)
    hits = retrieve(index, tokens, k=min(MAX_K, len(kb.qa_pairs)))
    ranked = rank(
        model, question, ctx, hits, kb, index, taxonomy, global_idf,
        no_answer_threshold=threshold,
    )
    if kb.persona != "none":
        decision = classify_domain(question, ranked[0].score, chat_corpus)
        if decision.label == "chitchat":
            reply = chitchat_answer(question, kb.persona, chat_corpus)
            if reply is not None:
                chat = RankedAnswer(qa_id=None, score=reply.score, answer_text=reply.response)
                return [chat], "chitchat"
    return ranked, ("noanswer" if ranked[0].qa_id is None else "kb")


class KbStore:
    """All KB snapshots plus their on-disk mirrors.

    Readers take the current snapshot with one dict lookup and never block.
    Writers hold the per-KB lock, persist to disk first, then swap the
    snapshot in, so an acknowledged mutation is both durable and visible.
    """

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.kbs_dir = config.data_dir / "kbs"
        self.kbs_dir.mkdir(parents=True, exist_ok=True)
        probe = self.kbs_dir / ".writable"
        probe.write_text("", encoding="utf-8")
        probe.unlink()
        self.default_model = (
            load_model(config.model_path) if config.model_path else load_default_model()
        )
        self.taxonomy = load_taxonomy()
        self.global_idf = load_global_idf()
        self.chat_corpus: ChitChatCorpus = default_corpus()
        self._states: dict[str, KbState] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self._load_all()

    # --- persistence ---

    def _kb_dir(self, kb_id: str) -> Path:
        return self.kbs_dir / kb_id

    def _load_all(self) -> None:
        for kb_file in sorted(self.kbs_dir.glob("*/kb.json")):
            kb_dir = kb_file.parent
            kb = parse_kb(kb_file.read_text(encoding="utf-8"))
            revision_file = kb_dir / "revision"
            # a crash between kb.json and revision writes leaves a fresh KB
            # without its revision marker; treat it as revision 1
            revision = (
                int(revision_file.read_text(encoding="utf-8").strip())
                if revision_file.exists()
                else 1
            )
            suggestions = []
            suggestions_file = kb_dir / "suggestions.jsonl"
            if suggestions_file.exists():
                for line in suggestions_file.read_text(encoding="utf-8").splitlines():
                    if line.strip():
                        suggestions.append(al.suggestion_from_dict(json.loads(line)))
            overlay = kb_dir / "model-overlay.json"
            model = load_model(overlay) if overlay.exists() else None
            self._states[kb.kb_id] = KbState(
                kb=kb,
                index=build_index(kb),
                revision=revision,
                suggestions=tuple(suggestions),
                model=model,
            )
            self._locks[kb.kb_id] = threading.Lock()

    def _persist(self, state: KbState) -> None:
        kb_dir = self._kb_dir(state.kb.kb_id)
        kb_dir.mkdir(parents=True, exist_ok=True)
        _write_atomic(kb_dir / "kb.json", serialize_kb(state.kb))
        _write_atomic(kb_dir / "revision", f"{state.revision}\n")
        lines = [json.dumps(al.suggestion_to_dict(s), sort_keys=True) for s in state.suggestions]
        _write_atomic(kb_dir / "suggestions.jsonl", "".join(line + "\n" for line in lines))

    def _append_feedback(self, kb_id: str, record: al.FeedbackRecord) -> None:
        path = self._kb_dir(kb_id) / "feedback.jsonl"
        with path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(al.feedback_to_dict(record), sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    # --- snapshot access ---

    def get_state(self, kb_id: str) -> KbState:
        state = self._states.get(kb_id)
        if state is None:
            raise ApiError(404, "kb_not_found", f"no knowledge base with id {kb_id!r}")
        return state

    def _lock_for(self, kb_id: str) -> threading.Lock:
        lock = self._locks.get(kb_id)
        if lock is None:
            raise ApiError(404, "kb_not_found", f"no knowledge base with id {kb_id!r}")
        return lock

    def list_kbs(self) -> list[dict]:
        rows = []
        for state in sorted(self._states.values(), key=lambda s: s.kb.name.lower()):
            rows.append(
                {
                    "kbId": state.kb.kb_id,
                    "name": state.kb.name,
                    "persona": state.kb.persona,
                    "qaCount": len(state.kb.qa_pairs),
                    "revision": state.revision,
                    "pendingSuggestions": sum(
                        1 for s in state.suggestions if s.status == "pending"
                    ),
                }
            )
        return rows

    # --- mutations ---

    def _check_name_free(self, name: str, ignore_kb_id: str | None = None) -> None:
        for state in self._states.values():
            if state.kb.kb_id != ignore_kb_id and state.kb.name.lower() == name.lower():
                raise ApiError(409, "duplicate_name", f"a knowledge base named {name!r} exists")

    def create_kb(self, payload: dict) -> tuple[KbState, list[str]]:
        allowed = {"name", "persona", "sourceFiles", "editorialQAs"}
        unknown = set(payload) - allowed
        if unknown:
            raise ApiError(400, "bad_request", f"unknown fields {sorted(unknown)}")
        name = _str_field(payload, "name", "create")
        if not name.strip():
            raise ApiError(400, "bad_request", "create: name must not be empty")
        persona = payload.get("persona", "none")
        if persona not in PERSONAS:
            raise ApiError(400, "bad_request", f"unknown persona {persona!r}")
        sources = payload.get("sourceFiles", [])
        editorial = payload.get("editorialQAs", [])
        if not isinstance(sources, list) or any(not isinstance(s, str) for s in sources):
            raise ApiError(400, "bad_request", "sourceFiles must be a list of file paths")
        if not isinstance(editorial, list):
            raise ApiError(400, "bad_request", "editorialQAs must be a list")
        if not sources and not editorial:
            raise ApiError(400, "bad_request", "no sources: need sourceFiles or editorialQAs")

        warnings: list[str] = []
        qa_pairs: list[QAPair] = []
        if sources:
            source_errors = []
            for source in sources:
                path = Path(source)
                if not path.is_file():
                    source_errors.append(f"{source}: file not found")
                elif path.suffix.lower() not in (".txt", ".md", ".markdown", ".html", ".htm"):
                    source_errors.append(f"{source}: unsupported extension {path.suffix!r}")
            if source_errors:
                raise ApiError(
                    400, "extraction_failed", "could not extract sources", source_errors
                )
            try:
                result = extract_paths(sources)
            except (OSError, ValueError) as err:
                raise ApiError(400, "extraction_failed", "could not extract sources", [str(err)])
            qa_pairs.extend(result.qa_pairs)
            warnings.extend(result.warnings)
        next_id = max((qa.id for qa in qa_pairs), default=0) + 1
        for i, doc in enumerate(editorial):
            qa_pairs.append(_qa_from_doc(doc, next_id + i, f"editorialQAs[{i}]"))

        kb = KnowledgeBase.build(
            kb_id=uuid.uuid4().hex[:12], name=name, qa_pairs=qa_pairs, persona=persona
        )
        problems = validate_kb(kb)
        if problems:
            raise ApiError(400, "validation_failed", "knowledge base is invalid", problems)

        with self._registry_lock:
            self._check_name_free(name)
            state = KbState(kb=kb, index=build_index(kb), revision=1)
            self._persist(state)
            self._states[kb.kb_id] = state
            self._locks[kb.kb_id] = threading.Lock()
        return state, warnings

    def import_kb(self, payload: dict) -> KbState:
        try:
            kb = parse_kb(json.dumps(payload))
        except ValueError as err:
            raise ApiError(400, "invalid_kb", "import file rejected", [str(err)])
        problems = validate_kb(kb)
        if problems:
            raise ApiError(400, "validation_failed", "knowledge base is invalid", problems)
        with self._registry_lock:
            if kb.kb_id in self._states:
                raise ApiError(409, "kb_exists", f"knowledge base {kb.kb_id!r} already exists")
            self._check_name_free(kb.name)
            state = KbState(kb=kb, index=build_index(kb), revision=1)
            self._persist(state)
            self._states[kb.kb_id] = state
            self._locks[kb.kb_id] = threading.Lock()
        return state

    def update_kb(self, kb_id: str, patch: dict, expected_revision: int | None) -> KbState:
        allowed = {"name", "persona", "synonyms", "add", "edit", "delete"}
        unknown = set(patch) - allowed
        if unknown:
            raise ApiError(400, "bad_request", f"unknown fields {sorted(unknown)}")
        with self._lock_for(kb_id):
            state = self.get_state(kb_id)
            if expected_revision is not None and expected_revision != state.revision:
                raise ApiError(
                    409,
                    "revision_conflict",
                    "knowledge base changed since it was read",
                    [f"expected revision {expected_revision}, current {state.revision}"],
                )
            kb = state.kb
            name = patch.get("name", kb.name)
            if not isinstance(name, str) or not name.strip():
                raise ApiError(400, "bad_request", "name must be a non-empty string")
            persona = patch.get("persona", kb.persona)
            if persona not in PERSONAS:
                raise ApiError(400, "bad_request", f"unknown persona {persona!r}")
            synonyms = patch.get("synonyms")
            if synonyms is not None and (
                not isinstance(synonyms, list)
                or any(
                    not isinstance(group, list) or any(not isinstance(w, str) for w in group)
                    for group in synonyms
                )
            ):
                raise ApiError(400, "bad_request", "synonyms must be a list of word lists")

            by_id = {qa.id: qa for qa in kb.qa_pairs}
            deletes = patch.get("delete", [])
            if not isinstance(deletes, list) or any(not isinstance(d, int) for d in deletes):
                raise ApiError(400, "bad_request", "delete must be a list of QA ids")
            for qa_id in deletes:
                if qa_id not in by_id:
                    raise ApiError(400, "unknown_qa", f"cannot delete unknown QA id {qa_id}")
                del by_id[qa_id]
            edits = patch.get("edit", [])
            if not isinstance(edits, list):
                raise ApiError(400, "bad_request", "edit must be a list of QA objects")
            for i, doc in enumerate(edits):
                if not isinstance(doc, dict) or not isinstance(doc.get("id"), int):
                    raise ApiError(400, "bad_request", f"edit[{i}]: needs an integer id")
                if doc["id"] not in by_id:
                    raise ApiError(400, "unknown_qa", f"cannot edit unknown QA id {doc['id']}")
                by_id[doc["id"]] = _qa_from_doc(doc, doc["id"], f"edit[{i}]")
            adds = patch.get("add", [])
            if not isinstance(adds, list):
                raise ApiError(400, "bad_request", "add must be a list of QA objects")
            ordered = [by_id[qa.id] for qa in kb.qa_pairs if qa.id in by_id]
            next_id = max((qa.id for qa in kb.qa_pairs), default=0) + 1
            for i, doc in enumerate(adds):
                ordered.append(_qa_from_doc(doc, next_id + i, f"add[{i}]"))

            if name.lower() != kb.name.lower():
                with self._registry_lock:
                    self._check_name_free(name, ignore_kb_id=kb_id)
            new_kb = KnowledgeBase.build(
                kb_id=kb.kb_id,
                name=name,
                qa_pairs=ordered,
                synonyms=synonyms if synonyms is not None else kb.synonyms,
                persona=persona,
            )
            problems = validate_kb(new_kb)
            if problems:
                raise ApiError(400, "validation_failed", "patch would invalidate the KB", problems)
            new_state = replace(
                state, kb=new_kb, index=build_index(new_kb), revision=state.revision + 1
            )
            self._persist(new_state)
            self._states[kb_id] = new_state
            return new_state

    def delete_kb(self, kb_id: str) -> None:
        # lock order everywhere is per-KB first, registry second
        with self._lock_for(kb_id):
            with self._registry_lock:
                if kb_id not in self._states:
                    raise ApiError(404, "kb_not_found", f"no knowledge base with id {kb_id!r}")
                del self._states[kb_id]
                del self._locks[kb_id]
                shutil.rmtree(self._kb_dir(kb_id), ignore_errors=True)

    # --- answering ---

    def _parse_context(self, kb: KnowledgeBase, doc: dict | None) -> QueryContext:
        if doc is None:
            return QueryContext()
        if not isinstance(doc, dict):
            raise ApiError(400, "bad_request", "context must be an object")
        unknown = set(doc) - {"previousQaId", "previousUserQuery"}
        if unknown:
            raise ApiError(400, "bad_request", f"context: unknown fields {sorted(unknown)}")
        previous_qa_id = doc.get("previousQaId")
        previous_answer = None
        if previous_qa_id is not None:
            if not isinstance(previous_qa_id, int):
                raise ApiError(400, "bad_request", "context.previousQaId must be an integer")
            previous = kb.get(previous_qa_id)
            if previous is None:
                raise ApiError(
                    400, "bad_request", f"context.previousQaId {previous_qa_id} is not in the KB"
                )
            previous_answer = previous.answer
        previous_query = doc.get("previousUserQuery")
        if previous_query is not None and not isinstance(previous_query, str):
            raise ApiError(400, "bad_request", "context.previousUserQuery must be a string")
        return QueryContext(
            previous_qa_id=previous_qa_id,
            previous_user_query=previous_query,
            previous_answer=previous_answer,
        )

    def generate_answer(self, kb_id: str, payload: dict) -> dict:
        allowed = {"question", "top", "context", "scoreThreshold"}
        unknown = set(payload) - allowed
        if unknown:
            raise ApiError(400, "bad_request", f"unknown fields {sorted(unknown)}")
        state = self.get_state(kb_id)
        question = _str_field(payload, "question", "generateAnswer")
        if not question.strip():
            raise ApiError(400, "bad_request", "question must not be empty")
        top = payload.get("top", 1)
        if not isinstance(top, int) or not 1 <= top <= self.config.max_top:
            raise ApiError(
                400, "bad_request", f"top must be an integer within [1, {self.config.max_top}]"
            )
        threshold = payload.get("scoreThreshold", self.config.no_answer_threshold)
        if not isinstance(threshold, (int, float)) or not 0.0 <= threshold <= 1.0:
            raise ApiError(400, "bad_request", "scoreThreshold must be within [0, 1]")
        ctx = self._parse_context(state.kb, payload.get("context"))

        ranked, kind = answer_pipeline(
            state.kb,
            state.index,
            state.model or self.default_model,
            self.taxonomy,
            self.global_idf,
            self.chat_corpus,
            question,
            ctx,
            threshold=threshold,
        )

        if self.config.active_learning and kind == "kb":
            fired = al.detect_disagreement(
                ranked, margin=self.config.disagreement_margin, score_band=self.config.score_band
            )
            if fired is not None:
                self._record_disagreement(kb_id, question, fired[0])

        docs = [_answer_to_doc(a, kind) for a in ranked[: top if kind == "kb" else 1]]
        return {"answers": docs, "activeLearningEnabled": self.config.active_learning}

    def _next_suggestion_id(self, state: KbState) -> int:
        return max((s.suggestion_id for s in state.suggestions), default=0) + 1

    def _record_disagreement(self, kb_id: str, query: str, target_qa_id: int) -> None:
        with self._lock_for(kb_id):
            state = self.get_state(kb_id)
            for s in state.suggestions:
                if (
                    s.status == "pending"
                    and s.origin == "disagreement"
                    and s.query_text == query
                    and s.target_qa_id == target_qa_id
                ):
                    return  # the same uncertainty seen twice is one suggestion
            suggestion = al.suggestion_from_disagreement(
                self._next_suggestion_id(state), query, target_qa_id, created_at=time.time()
            )
            new_state = replace(state, suggestions=state.suggestions + (suggestion,))
            self._persist(new_state)
            self._states[kb_id] = new_state

    # --- feedback and suggestions ---

    def submit_feedback(self, kb_id: str, payload: dict) -> dict:
        allowed = {"queryText", "shownQaId", "selectedQaId", "timestamp"}
        unknown = set(payload) - allowed
        if unknown:
            raise ApiError(400, "bad_request", f"unknown fields {sorted(unknown)}")
        query_text = _str_field(payload, "queryText", "feedback")
        shown = payload.get("shownQaId")
        if not isinstance(shown, int):
            raise ApiError(400, "bad_request", "feedback: shownQaId must be an integer")
        selected = payload.get("selectedQaId")
        if selected is not None and not isinstance(selected, int):
            raise ApiError(400, "bad_request", "feedback: selectedQaId must be an integer or null")
        timestamp = payload.get("timestamp", time.time())
        if not isinstance(timestamp, (int, float)):
            raise ApiError(400, "bad_request", "feedback: timestamp must be a number")

        with self._lock_for(kb_id):
            state = self.get_state(kb_id)
            for qa_id, label in ((shown, "shownQaId"), (selected, "selectedQaId")):
                if qa_id is not None and state.kb.get(qa_id) is None:
                    raise ApiError(400, "unknown_qa", f"feedback: {label} {qa_id} is not in the KB")
            record = al.FeedbackRecord(
                query_text=query_text,
                shown_qa_id=shown,
                selected_qa_id=selected,
                timestamp=float(timestamp),
            )
            self._append_feedback(kb_id, record)
            suggestion = al.suggestion_from_feedback(self._next_suggestion_id(state), record)
            if suggestion is not None:
                new_state = replace(state, suggestions=state.suggestions + (suggestion,))
                self._persist(new_state)
                self._states[kb_id] = new_state
            return {
                "accepted": True,
                "suggestionId": suggestion.suggestion_id if suggestion else None,
            }

    def list_suggestions(self, kb_id: str, status: str) -> dict:
        if status not in ("pending", "all"):
            raise ApiError(400, "bad_request", "status must be 'pending' or 'all'")
        state = self.get_state(kb_id)
        pending = [s for s in state.suggestions if s.status == "pending"]
        clustered = al.cluster_suggestions(
            pending, eps=self.config.dbscan_eps, min_pts=self.config.dbscan_min_pts
        )
        reps = {s.suggestion_id for s in al.representatives(clustered)}
        docs = []
        for s in clustered:
            doc = al.suggestion_to_dict(s)
            doc["representative"] = s.suggestion_id in reps
            docs.append(doc)
        if status == "all":
            for s in state.suggestions:
                if s.status != "pending":
                    doc = al.suggestion_to_dict(s)
                    doc["representative"] = False
                    docs.append(doc)
        return {"suggestions": docs}

    def resolve_suggestion(self, kb_id: str, suggestion_id: int, payload: dict) -> dict:
        allowed = {"decision", "wholeCluster"}
        unknown = set(payload) - allowed
        if unknown:
            raise ApiError(400, "bad_request", f"unknown fields {sorted(unknown)}")
        decision = _str_field(payload, "decision", "resolve")
        if decision not in ("accept", "reject"):
            raise ApiError(400, "bad_request", "decision must be 'accept' or 'reject'")
        whole_cluster = payload.get("wholeCluster", False)
        if not isinstance(whole_cluster, bool):
            raise ApiError(400, "bad_request", "wholeCluster must be a boolean")

        with self._lock_for(kb_id):
            state = self.get_state(kb_id)
            target = next(
                (s for s in state.suggestions if s.suggestion_id == suggestion_id), None
            )
            if target is None:
                raise ApiError(404, "suggestion_not_found", f"no suggestion {suggestion_id}")
            if target.status != "pending":
                raise ApiError(
                    409, "already_resolved", f"suggestion {suggestion_id} is {target.status}"
                )
            members = [target]
            if whole_cluster:
                pending = [s for s in state.suggestions if s.status == "pending"]
                clustered = al.cluster_suggestions(
                    pending, eps=self.config.dbscan_eps, min_pts=self.config.dbscan_min_pts
                )
                cluster_id = next(
                    s.cluster_id for s in clustered if s.suggestion_id == suggestion_id
                )
                members = [s for s in clustered if s.cluster_id == cluster_id]
            new_kb, resolved = al.resolve_cluster(state.kb, members, decision)
            resolved_by_id = {s.suggestion_id: s for s in resolved}
            suggestions = tuple(
                resolved_by_id.get(s.suggestion_id, s) for s in state.suggestions
            )
            kb_changed = new_kb is not state.kb
            new_state = replace(
                state,
                kb=new_kb,
                index=build_index(new_kb) if kb_changed else state.index,
                revision=state.revision + 1 if kb_changed else state.revision,
                suggestions=suggestions,
            )
            self._persist(new_state)
            self._states[kb_id] = new_state
            return {
                "resolved": sorted(resolved_by_id),
                "decision": decision,
                "revision": new_state.revision,
            }


def _ui_directory() -> Path | None:
    ui_dir = Path(__file__).parent / "data" / "ui"
    return ui_dir if (ui_dir / "index.html").exists() else None


def create_app(config: ServiceConfig) -> FastAPI:
    store = KbStore(config)
    app = FastAPI(title="faqkb", version="0.1.0")
    app.state.store = store

    @app.exception_handler(ApiError)
    def on_api_error(request: Request, err: ApiError):
        return JSONResponse(status_code=err.status, content=err.body())

    @app.exception_handler(RequestValidationError)
    def on_validation_error(request: Request, err: RequestValidationError):
        details = [f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in err.errors()]
        return JSONResponse(
            status_code=400,
            content={"code": "bad_request", "message": "malformed request", "details": details},
        )

    @app.exception_handler(StarletteHTTPException)
    def on_http_error(request: Request, err: StarletteHTTPException):
        return JSONResponse(
            status_code=err.status_code,
            content={"code": "http_error", "message": str(err.detail), "details": []},
        )

    @app.post("/kbs", status_code=201)
    def create_kb(payload: dict = Body(...)):
        state, warnings = store.create_kb(payload)
        return {
            "kbId": state.kb.kb_id,
            "revision": state.revision,
            "qaCount": len(state.kb.qa_pairs),
            "warnings": warnings,
        }

    @app.post("/kbs:import", status_code=201)
    def import_kb(payload: dict = Body(...)):
        state = store.import_kb(payload)
        return {
            "kbId": state.kb.kb_id,
            "revision": state.revision,
            "qaCount": len(state.kb.qa_pairs),
        }

    @app.get("/kbs")
    def list_kbs():
        return {"kbs": store.list_kbs()}

    @app.get("/kbs/{kb_id}")
    def get_kb(kb_id: str):
        state = store.get_state(kb_id)
        return {
            "kbId": state.kb.kb_id,
            "name": state.kb.name,
            "persona": state.kb.persona,
            "revision": state.revision,
            "synonyms": [sorted(group) for group in state.kb.synonyms],
            "qaPairs": [_qa_to_doc(qa) for qa in state.kb.qa_pairs],
        }

    @app.patch("/kbs/{kb_id}")
    def update_kb(
        kb_id: str,
        payload: dict = Body(...),
        x_expected_revision: int | None = Header(default=None),
    ):
        state = store.update_kb(kb_id, payload, x_expected_revision)
        return {"kbId": kb_id, "revision": state.revision}

    @app.delete("/kbs/{kb_id}", status_code=204)
    def delete_kb(kb_id: str):
        store.delete_kb(kb_id)
        return Response(status_code=204)

    @app.post("/kbs/{kb_id}/generateAnswer")
    def generate_answer(kb_id: str, payload: dict = Body(...)):
        return store.generate_answer(kb_id, payload)

    @app.post("/kbs/{kb_id}/feedback")
    def submit_feedback(kb_id: str, payload: dict = Body(...)):
        return store.submit_feedback(kb_id, payload)

    @app.get("/kbs/{kb_id}/suggestions")
    def list_suggestions(kb_id: str, status: str = "pending"):
        return store.list_suggestions(kb_id, status)

    @app.post("/kbs/{kb_id}/suggestions/{suggestion_id:int}:resolve")
    def resolve_suggestion(kb_id: str, suggestion_id: int, payload: dict = Body(...)):
        return store.resolve_suggestion(kb_id, suggestion_id, payload)

    @app.get("/kbs/{kb_id}/export")
    def export_kb(kb_id: str):
        state = store.get_state(kb_id)
        return Response(content=serialize_kb(state.kb), media_type="application/json")

    ui_dir = _ui_directory()
    if ui_dir is not None:
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

        @app.get("/", include_in_schema=False)
        def root():
            return RedirectResponse("/ui/")

    return app
