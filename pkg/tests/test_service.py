"""HTTP service tests: CRUD, answering, suggestions, durability, concurrency."""

import json
import threading

import pytest
from fastapi.testclient import TestClient

from faqkb.service import ApiError, KbStore, ServiceConfig, create_app


def make_app(tmp_path, **overrides):
    return create_app(ServiceConfig(data_dir=tmp_path / "data", **overrides))


def editorial_payload(name="Desk KB", persona="none"):
    return {
        "name": name,
        "persona": persona,
        "editorialQAs": [
            {"question": "What are your opening hours?",
             "answer": "We are open nine to five on weekdays."},
            {"question": "Where can I park?",
             "answer": "Free parking is behind the building."},
            {"question": "Know about XYZ",
             "answer": "XYZ is our shelving system. Do you want to know about XYZ?"},
            {"question": "Yes",
             "answer": "XYZ combines frames and boards into any layout you like.",
             "alternateQuestions": ["yes please", "sure"],
             "parentId": 3},
        ],
    }


@pytest.fixture()
def client(tmp_path):
    return TestClient(make_app(tmp_path))


@pytest.fixture()
def kb_id(client):
    response = client.post("/kbs", json=editorial_payload())
    assert response.status_code == 201
    return response.json()["kbId"]


class TestCreate:
    def test_editorial_create(self, client):
        response = client.post("/kbs", json=editorial_payload())
        assert response.status_code == 201
        body = response.json()
        assert body["qaCount"] == 4
        assert body["revision"] == 1
        assert body["warnings"] == []

    def test_empty_request_rejected(self, client):
        response = client.post("/kbs", json={"name": "Empty"})
        assert response.status_code == 400
        assert "no sources" in response.json()["message"]

    def test_duplicate_name_conflict(self, client):
        client.post("/kbs", json=editorial_payload())
        response = client.post("/kbs", json=editorial_payload(name="desk kb"))
        assert response.status_code == 409
        assert response.json()["code"] == "duplicate_name"

    def test_unknown_field_rejected(self, client):
        payload = {**editorial_payload(), "bogus": 1}
        response = client.post("/kbs", json=payload)
        assert response.status_code == 400

    def test_unknown_persona_rejected(self, client):
        response = client.post("/kbs", json=editorial_payload(persona="sassy"))
        assert response.status_code == 400

    def test_source_file_extraction(self, client, tmp_path):
        doc = tmp_path / "faq.md"
        doc.write_text(
            "# Store FAQ\n\n## How do I pay?\nBy card or cash.\n\n"
            "## Where are you?\nMain street 5.\n",
            encoding="utf-8",
        )
        response = client.post(
            "/kbs", json={"name": "From files", "sourceFiles": [str(doc)]}
        )
        assert response.status_code == 201
        assert response.json()["qaCount"] == 2

    def test_missing_source_reported_per_file(self, client, tmp_path):
        doc = tmp_path / "real.md"
        doc.write_text("## Q?\nA.\n", encoding="utf-8")
        response = client.post(
            "/kbs",
            json={"name": "Bad", "sourceFiles": [str(doc), "/nope/gone.md", "x.pdf"]},
        )
        assert response.status_code == 400
        details = response.json()["details"]
        assert len(details) == 2
        assert any("gone.md" in d for d in details)
        assert any("x.pdf" in d for d in details)


class TestGenerateAnswer:
    def test_kb_answer(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer", json={"question": "when do you open"}
        )
        assert response.status_code == 200
        body = response.json()
        top = body["answers"][0]
        assert top["qaId"] == 1
        assert top["kind"] == "kb"
        assert 0.0 <= top["score"] <= 1.0
        assert set(top["features"]) == {
            "wnQ", "wnA", "semQ", "semA", "tfidfQ", "tfidfA", "retrievalScore",
            "wnQc", "wnAc", "semQc", "semAc", "tfidfQc", "tfidfAc",
        }
        assert body["activeLearningEnabled"] is True

    def test_gibberish_hits_sentinel(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer", json={"question": "zxqv fnord blib"}
        )
        top = response.json()["answers"][0]
        assert top["qaId"] is None
        assert top["kind"] == "noanswer"
        assert "No good match" in top["answer"]

    def test_multi_turn_context(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer",
            json={"question": "yes", "context": {"previousQaId": 3}},
        )
        top = response.json()["answers"][0]
        assert top["qaId"] == 4
        assert top["kind"] == "kb"

    def test_unknown_context_qa(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer",
            json={"question": "yes", "context": {"previousQaId": 99}},
        )
        assert response.status_code == 400

    def test_malformed_context_field(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer",
            json={"question": "yes", "context": {"prevQa": 3}},
        )
        assert response.status_code == 400

    def test_top_bound(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer", json={"question": "hours", "top": 99}
        )
        assert response.status_code == 400
        # top caps the answer count; retrieval decides how many candidates exist
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer",
            json={"question": "know about xyz parking hours", "top": 3},
        )
        answers = response.json()["answers"]
        assert 2 <= len(answers) <= 3
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer",
            json={"question": "know about xyz parking hours", "top": 1},
        )
        assert len(response.json()["answers"]) == 1

    def test_threshold_override(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer",
            json={"question": "when do you open", "scoreThreshold": 0.999},
        )
        assert response.json()["answers"][0]["kind"] == "noanswer"

    def test_unknown_kb_404(self, client):
        response = client.post("/kbs/nope/generateAnswer", json={"question": "hi"})
        assert response.status_code == 404
        body = response.json()
        assert set(body) == {"code", "message", "details"}

    def test_empty_question_rejected(self, client, kb_id):
        response = client.post(f"/kbs/{kb_id}/generateAnswer", json={"question": "  "})
        assert response.status_code == 400


class TestChitChat:
    def test_persona_kb_routes_small_talk(self, client):
        kb_id = client.post("/kbs", json=editorial_payload(persona="witty")).json()["kbId"]
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer", json={"question": "thank you"}
        )
        top = response.json()["answers"][0]
        assert top["kind"] == "chitchat"
        assert top["qaId"] is None
        assert top["answer"]

    def test_persona_none_never_chitchats(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer", json={"question": "thank you"}
        )
        assert response.json()["answers"][0]["kind"] != "chitchat"

    def test_domain_question_beats_small_talk(self, client):
        kb_id = client.post("/kbs", json=editorial_payload(persona="witty")).json()["kbId"]
        response = client.post(
            f"/kbs/{kb_id}/generateAnswer", json={"question": "when do you open"}
        )
        top = response.json()["answers"][0]
        assert top["kind"] == "kb"
        assert top["qaId"] == 1


class TestUpdate:
    def test_add_then_read_your_writes(self, client, kb_id):
        patch = {"add": [{"question": "Do you ship abroad?", "answer": "Yes, worldwide."}]}
        response = client.patch(f"/kbs/{kb_id}", json=patch)
        assert response.status_code == 200
        assert response.json()["revision"] == 2
        answer = client.post(
            f"/kbs/{kb_id}/generateAnswer", json={"question": "do you ship abroad"}
        ).json()["answers"][0]
        assert answer["qaId"] == 5

    def test_edit_and_delete(self, client, kb_id):
        response = client.patch(
            f"/kbs/{kb_id}",
            json={
                "edit": [{"id": 2, "question": "Where can I park?",
                          "answer": "Parking moved to the roof."}],
                "delete": [4],
            },
        )
        assert response.status_code == 200
        detail = client.get(f"/kbs/{kb_id}").json()
        by_id = {qa["id"]: qa for qa in detail["qaPairs"]}
        assert by_id[2]["answer"] == "Parking moved to the roof."
        assert 4 not in by_id

    def test_stale_revision_conflict(self, client, kb_id):
        response = client.patch(
            f"/kbs/{kb_id}",
            json={"persona": "friendly"},
            headers={"X-Expected-Revision": "42"},
        )
        assert response.status_code == 409
        body = response.json()
        assert body["code"] == "revision_conflict"
        assert body["details"]

    def test_matching_revision_succeeds(self, client, kb_id):
        response = client.patch(
            f"/kbs/{kb_id}",
            json={"persona": "friendly"},
            headers={"X-Expected-Revision": "1"},
        )
        assert response.status_code == 200
        assert client.get(f"/kbs/{kb_id}").json()["persona"] == "friendly"

    def test_unknown_qa_edit_rejected(self, client, kb_id):
        response = client.patch(
            f"/kbs/{kb_id}", json={"edit": [{"id": 99, "question": "x", "answer": "y"}]}
        )
        assert response.status_code == 400
        assert response.json()["code"] == "unknown_qa"

    def test_dangling_parent_rejected(self, client, kb_id):
        # QA 4 points at parent 3; deleting only the parent must fail validation
        response = client.patch(f"/kbs/{kb_id}", json={"delete": [3]})
        assert response.status_code == 400
        assert response.json()["code"] == "validation_failed"

    def test_delete_kb(self, client, kb_id):
        response = client.delete(f"/kbs/{kb_id}")
        assert response.status_code == 204
        assert client.get(f"/kbs/{kb_id}").status_code == 404
        assert client.delete(f"/kbs/{kb_id}").status_code == 404


class TestSuggestions:
    def test_feedback_correction_creates_suggestion(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/feedback",
            json={"queryText": "opening time", "shownQaId": 2, "selectedQaId": 1},
        )
        assert response.status_code == 200
        assert response.json()["suggestionId"] == 1
        listing = client.get(f"/kbs/{kb_id}/suggestions").json()["suggestions"]
        assert len(listing) == 1
        assert listing[0]["origin"] == "feedback"
        assert listing[0]["targetQaId"] == 1
        assert listing[0]["status"] == "pending"

    def test_agreeing_feedback_is_not_a_suggestion(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/feedback",
            json={"queryText": "opening time", "shownQaId": 1, "selectedQaId": 1},
        )
        assert response.json()["suggestionId"] is None
        assert client.get(f"/kbs/{kb_id}/suggestions").json()["suggestions"] == []

    def test_unknown_qa_feedback_rejected(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/feedback",
            json={"queryText": "x", "shownQaId": 99, "selectedQaId": None},
        )
        assert response.status_code == 400

    def test_near_duplicates_cluster_together(self, client, kb_id):
        for query in ("what time do you open", "what time do you open up", "parking fee"):
            client.post(
                f"/kbs/{kb_id}/feedback",
                json={"queryText": query, "shownQaId": 2, "selectedQaId": 1},
            )
        listing = client.get(f"/kbs/{kb_id}/suggestions").json()["suggestions"]
        clusters = {s["queryText"]: s["clusterId"] for s in listing}
        assert clusters["what time do you open"] == clusters["what time do you open up"]
        assert clusters["parking fee"] != clusters["what time do you open"]
        representatives = [s for s in listing if s["representative"]]
        assert len(representatives) == 2

    def test_accept_grafts_alternate_and_bumps_revision(self, client, kb_id):
        client.post(
            f"/kbs/{kb_id}/feedback",
            json={"queryText": "opening time", "shownQaId": 2, "selectedQaId": 1},
        )
        response = client.post(
            f"/kbs/{kb_id}/suggestions/1:resolve", json={"decision": "accept"}
        )
        assert response.status_code == 200
        assert response.json()["revision"] == 2
        detail = client.get(f"/kbs/{kb_id}").json()
        qa = next(q for q in detail["qaPairs"] if q["id"] == 1)
        assert "opening time" in qa["alternateQuestions"]
        resolved = client.get(f"/kbs/{kb_id}/suggestions", params={"status": "all"})
        assert resolved.json()["suggestions"][0]["status"] == "accepted"

    def test_reject_leaves_kb_snapshot_equal(self, client, kb_id):
        before = client.get(f"/kbs/{kb_id}/export").text
        client.post(
            f"/kbs/{kb_id}/feedback",
            json={"queryText": "opening time", "shownQaId": 2, "selectedQaId": 1},
        )
        response = client.post(
            f"/kbs/{kb_id}/suggestions/1:resolve", json={"decision": "reject"}
        )
        assert response.status_code == 200
        assert response.json()["revision"] == 1
        assert client.get(f"/kbs/{kb_id}/export").text == before

    def test_double_resolve_conflicts(self, client, kb_id):
        client.post(
            f"/kbs/{kb_id}/feedback",
            json={"queryText": "opening time", "shownQaId": 2, "selectedQaId": 1},
        )
        client.post(f"/kbs/{kb_id}/suggestions/1:resolve", json={"decision": "reject"})
        response = client.post(
            f"/kbs/{kb_id}/suggestions/1:resolve", json={"decision": "accept"}
        )
        assert response.status_code == 409
        assert response.json()["code"] == "already_resolved"

    def test_whole_cluster_accept(self, client, kb_id):
        for query in ("what time do you open", "what time do you open up"):
            client.post(
                f"/kbs/{kb_id}/feedback",
                json={"queryText": query, "shownQaId": 2, "selectedQaId": 1},
            )
        response = client.post(
            f"/kbs/{kb_id}/suggestions/1:resolve",
            json={"decision": "accept", "wholeCluster": True},
        )
        assert sorted(response.json()["resolved"]) == [1, 2]
        qa = next(
            q for q in client.get(f"/kbs/{kb_id}").json()["qaPairs"] if q["id"] == 1
        )
        assert "what time do you open" in qa["alternateQuestions"]
        assert "what time do you open up" in qa["alternateQuestions"]

    def test_missing_suggestion_404(self, client, kb_id):
        response = client.post(
            f"/kbs/{kb_id}/suggestions/7:resolve", json={"decision": "accept"}
        )
        assert response.status_code == 404

    def test_duplicate_disagreement_recorded_once(self, tmp_path):
        app = make_app(tmp_path)
        store: KbStore = app.state.store
        client = TestClient(app)
        kb_id = client.post("/kbs", json=editorial_payload()).json()["kbId"]
        store._record_disagreement(kb_id, "odd query", 1)
        store._record_disagreement(kb_id, "odd query", 1)
        listing = client.get(f"/kbs/{kb_id}/suggestions").json()["suggestions"]
        assert len(listing) == 1


class TestUiMount:
    """The bundled admin console is served when its build output ships."""

    def test_ui_page_served(self, client):
        response = client.get("/ui/")
        assert response.status_code == 200
        assert "text/html" in response.headers["content-type"]
        assert 'id="app"' in response.text

    def test_root_redirects_to_ui(self, client):
        response = client.get("/", follow_redirects=False)
        assert response.status_code in (302, 307)
        assert response.headers["location"] == "/ui/"

    def test_ui_modules_served_as_javascript(self, client):
        response = client.get("/ui/app.js")
        assert response.status_code == 200
        assert "javascript" in response.headers["content-type"]


class TestImportExport:
    def test_round_trip(self, client, kb_id):
        exported = client.get(f"/kbs/{kb_id}/export").text
        client.delete(f"/kbs/{kb_id}")
        response = client.post("/kbs:import", json=json.loads(exported))
        assert response.status_code == 201
        assert response.json()["kbId"] == kb_id
        assert client.get(f"/kbs/{kb_id}/export").text == exported

    def test_import_existing_id_conflicts(self, client, kb_id):
        exported = json.loads(client.get(f"/kbs/{kb_id}/export").text)
        response = client.post("/kbs:import", json=exported)
        assert response.status_code == 409

    def test_import_rejects_unknown_fields(self, client):
        response = client.post(
            "/kbs:import",
            json={"kbId": "x", "name": "X", "persona": "none",
                  "synonyms": [], "qaPairs": [], "surprise": 1},
        )
        assert response.status_code == 400


class TestDurability:
    def test_restart_preserves_everything(self, tmp_path):
        client = TestClient(make_app(tmp_path))
        kb_id = client.post("/kbs", json=editorial_payload()).json()["kbId"]
        client.patch(f"/kbs/{kb_id}", json={"persona": "caring"})
        client.post(
            f"/kbs/{kb_id}/feedback",
            json={"queryText": "opening time", "shownQaId": 2, "selectedQaId": 1},
        )
        exported = client.get(f"/kbs/{kb_id}/export").text

        reborn = TestClient(make_app(tmp_path))
        assert reborn.get(f"/kbs/{kb_id}/export").text == exported
        detail = reborn.get(f"/kbs/{kb_id}").json()
        assert detail["revision"] == 2
        assert detail["persona"] == "caring"
        suggestions = reborn.get(f"/kbs/{kb_id}/suggestions").json()["suggestions"]
        assert len(suggestions) == 1
        assert suggestions[0]["queryText"] == "opening time"

    def test_no_temp_files_left_behind(self, tmp_path):
        client = TestClient(make_app(tmp_path))
        kb_id = client.post("/kbs", json=editorial_payload()).json()["kbId"]
        client.patch(f"/kbs/{kb_id}", json={"persona": "witty"})
        leftovers = list((tmp_path / "data").rglob("*.tmp"))
        assert leftovers == []


class TestConcurrency:
    def test_queries_see_whole_snapshots_during_updates(self, tmp_path):
        app = make_app(tmp_path)
        store: KbStore = app.state.store
        client = TestClient(app)
        kb_id = client.post("/kbs", json=editorial_payload()).json()["kbId"]

        errors: list[Exception] = []
        seen_qa_ids: set[int | None] = set()
        stop = threading.Event()

        def reader():
            while not stop.is_set():
                try:
                    result = store.generate_answer(
                        kb_id, {"question": "when do you open"}
                    )
                    state = store.get_state(kb_id)
                    valid_ids = {qa.id for qa in state.kb.qa_pairs} | {None}
                    for answer in result["answers"]:
                        # a half-applied update would surface an id outside
                        # every committed snapshot
                        assert answer["qaId"] in valid_ids
                        seen_qa_ids.add(answer["qaId"])
                except Exception as err:  # pragma: no cover - fails the test
                    errors.append(err)
                    return

        threads = [threading.Thread(target=reader) for _ in range(4)]
        for t in threads:
            t.start()
        try:
            for i in range(25):
                store.update_kb(
                    kb_id,
                    {"add": [{"question": f"Extra question {i}?",
                              "answer": f"Extra answer {i}."}]},
                    expected_revision=None,
                )
        finally:
            stop.set()
            for t in threads:
                t.join(timeout=10)
        assert errors == []
        assert store.get_state(kb_id).revision == 26

    def test_concurrent_updates_with_same_revision_one_wins(self, tmp_path):
        app = make_app(tmp_path)
        store: KbStore = app.state.store
        client = TestClient(app)
        kb_id = client.post("/kbs", json=editorial_payload()).json()["kbId"]

        outcomes = []

        def writer(tag):
            try:
                store.update_kb(
                    kb_id,
                    {"add": [{"question": f"From {tag}?", "answer": tag}]},
                    expected_revision=1,
                )
                outcomes.append((tag, "ok"))
            except ApiError as err:
                outcomes.append((tag, err.code))

        threads = [threading.Thread(target=writer, args=(t,)) for t in ("a", "b")]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert sorted(result for _, result in outcomes) == ["ok", "revision_conflict"]
