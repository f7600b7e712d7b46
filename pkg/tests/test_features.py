import json
import math
import random
from pathlib import Path

import numpy as np
import pytest

from faqkb.features import (
    FEATURE_NAMES,
    SEMANTIC_DIM,
    FeatureExtractor,
    FeatureVector,
    GlobalIdf,
    contextual_expand,
    featurize,
    load_global_idf,
    load_taxonomy,
    semantic_similarity,
    semantic_vector,
    taxonomy_from_edges,
    taxonomy_fingerprint,
    taxonomy_word_sim,
    tfidf_feature,
    wordnet_feature,
)
from faqkb.index import build_index
from faqkb.kb import KnowledgeBase, QAPair, QueryContext
from faqkb.textpipe import lemmatize

from oracles import (
    reference_cosine,
    reference_semantic_vector,
    reference_taxonomy_sim,
    toy_feature_kb,
)

TOY_EDGES = [
    ("artifact", "root"),
    ("furniture", "artifact"),
    ("table", "furniture"),
    ("chair", "furniture"),
]
TOY_TAX = taxonomy_from_edges(TOY_EDGES)
UNIT_IDF: dict[str, float] = {}


def stream(kb, text):
    return kb.tokenize(text)


class TestTaxonomySim:
    def test_identity(self):
        assert taxonomy_word_sim("table", "table", TOY_TAX) == 1.0
        assert taxonomy_word_sim("zzz", "zzz", TOY_TAX) == 1.0

    def test_siblings(self):
        assert taxonomy_word_sim("table", "chair", TOY_TAX) == pytest.approx(0.6)

    def test_hypernym_of_query(self):
        assert taxonomy_word_sim("table", "furniture", TOY_TAX) == pytest.approx(0.75)

    def test_absent_word(self):
        assert taxonomy_word_sim("table", "zebra", TOY_TAX) == 0.0

    def test_symmetry(self):
        words = ["root", "artifact", "furniture", "table", "chair"]
        for a in words:
            for b in words:
                assert taxonomy_word_sim(a, b, TOY_TAX) == taxonomy_word_sim(b, a, TOY_TAX)

    def test_matches_reference(self):
        words = ["root", "artifact", "furniture", "table", "chair", "zebra"]
        for a in words:
            for b in words:
                assert taxonomy_word_sim(a, b, TOY_TAX) == pytest.approx(
                    reference_taxonomy_sim(a, b, TOY_EDGES)
                )

    def test_bounded(self):
        for a in TOY_TAX.ancestors:
            for b in TOY_TAX.ancestors:
                assert 0.0 <= taxonomy_word_sim(a, b, TOY_TAX) <= 1.0


class TestTaxonomyLoading:
    def test_cycle_rejected(self):
        with pytest.raises(ValueError, match="cycle"):
            taxonomy_from_edges([("c", "top"), ("a", "b"), ("b", "a")])

    def test_rootless_rejected(self):
        with pytest.raises(ValueError, match="no root"):
            taxonomy_from_edges([("a", "b"), ("b", "a")])

    def test_bundled_taxonomy_well_formed(self):
        tax = load_taxonomy()
        assert tax.roots == frozenset({"entity"})
        assert len(tax.ancestors) > 100
        # every node must be stable under the lemmatizer or queries can never hit it
        for word in tax.ancestors:
            assert lemmatize(word) == word, word
        assert all(d >= 1 for d in tax.depths.values())

    def test_fingerprint_stable(self):
        assert taxonomy_fingerprint() == taxonomy_fingerprint()
        assert len(taxonomy_fingerprint()) == 64


class TestWordnetFeature:
    def kb(self):
        return KnowledgeBase.build(
            "kb-wn", "wn", [QAPair(id=1, question="price of table", answer="ten dollars")]
        )

    def test_identical_streams(self):
        kb = self.kb()
        s = stream(kb, "table chair")
        assert wordnet_feature(s, s, TOY_TAX, UNIT_IDF, UNIT_IDF) == pytest.approx(1.0)

    def test_empty_query(self):
        kb = self.kb()
        empty = stream(kb, "")
        target = stream(kb, "table")
        assert wordnet_feature(empty, target, TOY_TAX, UNIT_IDF, UNIT_IDF) == 0.0
        assert wordnet_feature(target, empty, TOY_TAX, UNIT_IDF, UNIT_IDF) == 0.0

    def test_single_term_vs_hypernym(self):
        kb = self.kb()
        got = wordnet_feature(
            stream(kb, "table"), stream(kb, "furniture"), TOY_TAX, UNIT_IDF, UNIT_IDF
        )
        assert got == pytest.approx(0.75)

    def test_weighting_shifts_mass(self):
        kb = self.kb()
        q = stream(kb, "table zebra")
        t = stream(kb, "chair")
        # zebra contributes 0 similarity; upweighting "table" raises the blend
        flat = wordnet_feature(q, t, TOY_TAX, UNIT_IDF, UNIT_IDF)
        tilted = wordnet_feature(q, t, TOY_TAX, {"table": 10.0}, UNIT_IDF)
        assert tilted > flat


class TestSemanticVector:
    def test_unit_norm(self):
        v = semantic_vector("refund policy")
        assert v.shape == (SEMANTIC_DIM,)
        assert np.linalg.norm(v) == pytest.approx(1.0)

    def test_empty_is_zero(self):
        v = semantic_vector("")
        assert not v.any()
        assert semantic_similarity(v, semantic_vector("anything")) == 0.0

    def test_identical_text(self):
        a = semantic_vector("refund policy")
        assert semantic_similarity(a, semantic_vector("refund policy")) == pytest.approx(1.0)

    def test_disjoint_trigrams(self):
        assert semantic_similarity(semantic_vector("abc"), semantic_vector("xyz")) < 0.05

    def test_plural_variants_overlap(self):
        sim = semantic_similarity(
            semantic_vector("price of table"), semantic_vector("price of tables")
        )
        assert 0.8 < sim < 1.0

    def test_apostrophes_folded(self):
        assert np.array_equal(semantic_vector("what's up"), semantic_vector("whats up"))

    def test_stopwords_keep_mass(self):
        assert semantic_vector("what's up").any()

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            semantic_similarity(np.zeros(10), semantic_vector("x"))

    def test_matches_reference(self):
        for text in ["price of a table", "hello there!", "what's up", "", "a"]:
            assert np.allclose(semantic_vector(text), np.array(reference_semantic_vector(text)))

    def test_cosine_matches_reference(self):
        a, b = "can i return my order", "refund policy details"
        got = semantic_similarity(semantic_vector(a), semantic_vector(b))
        want = reference_cosine(reference_semantic_vector(a), reference_semantic_vector(b))
        assert got == pytest.approx(want, abs=1e-12)


class TestTfidfFeature:
    def kb(self):
        return KnowledgeBase.build(
            "kb-tf", "tf", [QAPair(id=1, question="price of table", answer="ten dollars")]
        )

    def test_identical(self):
        kb = self.kb()
        s = stream(kb, "price table")
        assert tfidf_feature(s, s, UNIT_IDF, UNIT_IDF) == pytest.approx(1.0)

    def test_disjoint(self):
        kb = self.kb()
        assert tfidf_feature(stream(kb, "price"), stream(kb, "zebra"), UNIT_IDF, UNIT_IDF) == 0.0

    def test_half_overlap(self):
        kb = self.kb()
        got = tfidf_feature(
            stream(kb, "price table"), stream(kb, "price furniture"), UNIT_IDF, UNIT_IDF
        )
        assert got == pytest.approx(0.5)

    def test_symmetry(self):
        kb = self.kb()
        a = stream(kb, "price table table")
        b = stream(kb, "price furniture")
        local = {"price": 2.0, "table": 1.5}
        assert tfidf_feature(a, b, local, UNIT_IDF) == pytest.approx(
            tfidf_feature(b, a, local, UNIT_IDF)
        )

    def test_empty_stream(self):
        kb = self.kb()
        assert tfidf_feature(stream(kb, ""), stream(kb, "price"), UNIT_IDF, UNIT_IDF) == 0.0


class TestGlobalIdf:
    def test_bundled_table_loads(self):
        g = load_global_idf()
        assert len(g) > 500
        assert g.default > 0

    def test_missing_word_gets_median(self):
        g = GlobalIdf({"a": 1.0, "b": 2.0, "c": 9.0})
        assert g.get("zzz") is None
        assert g.default == 2.0

    def test_plain_dict_default_is_unit(self):
        kb = KnowledgeBase.build(
            "kb-u", "u", [QAPair(id=1, question="table", answer="wood")]
        )
        s = stream(kb, "table")
        assert tfidf_feature(s, s, {}, {}) == pytest.approx(1.0)


class TestContextualExpand:
    def test_previous_answer_prefixes_query(self):
        kb = toy_feature_kb()
        ctx = QueryContext(previous_answer="do you want to know about XYZ")
        out = contextual_expand("yes", ctx, kb.qa_pairs[0], kb)
        assert out.modified_query == "do you want to know about XYZ yes"

    def test_parent_prefixes_candidate(self):
        kb = KnowledgeBase.build(
            "kb-ctx",
            "ctx",
            [
                QAPair(id=1, question="know about XYZ", answer="XYZ is a product"),
                QAPair(
                    id=2,
                    question="benefits",
                    answer="many",
                    parent_id=1,
                    alternate_questions=("advantages",),
                ),
            ],
        )
        out = contextual_expand("tell me", QueryContext(), kb.qa_pairs[1], kb)
        assert out.modified_candidate.question == "know about XYZ benefits"
        assert out.modified_candidate.answer == "XYZ is a product many"
        assert out.modified_candidate.alternate_questions == ("know about XYZ advantages",)
        assert out.modified_query == "tell me"

    def test_identity_without_context_or_parent(self):
        kb = toy_feature_kb()
        candidate = kb.qa_pairs[0]
        out = contextual_expand("anything", QueryContext(), candidate, kb)
        assert out.modified_query == "anything"
        assert out.modified_candidate is candidate

    def test_dangling_parent_errors(self):
        kb = toy_feature_kb()
        bad = QAPair(id=99, question="x", answer="y", parent_id=12345)
        with pytest.raises(ValueError, match="dangling parentId 12345"):
            contextual_expand("q", QueryContext(), bad, kb)

    def test_only_immediate_parent_used(self):
        kb = KnowledgeBase.build(
            "kb-deep",
            "deep",
            [
                QAPair(id=1, question="top", answer="a1"),
                QAPair(id=2, question="mid", answer="a2", parent_id=1),
                QAPair(id=3, question="leaf", answer="a3", parent_id=2),
            ],
        )
        out = contextual_expand("q", QueryContext(), kb.qa_pairs[2], kb)
        assert out.modified_candidate.question == "mid leaf"


@pytest.fixture(scope="module")
def setup():
    kb = toy_feature_kb()
    return kb, build_index(kb), load_taxonomy(), load_global_idf()


class TestFeaturize:

    def test_identical_query_maxes_question_features(self, setup):
        kb, index, tax, gidf = setup
        fv = featurize(
            "What is the price of a table?", QueryContext(), kb.qa_pairs[0], kb, index, tax, gidf
        )
        assert fv.wnQ == pytest.approx(1.0)
        assert fv.semQ == pytest.approx(1.0)
        assert fv.tfidfQ == pytest.approx(1.0)
        assert fv.retrievalScore == pytest.approx(1.0)

    def test_contextual_copies_equal_base_without_context(self, setup):
        kb, index, tax, gidf = setup
        for candidate in kb.qa_pairs:
            if candidate.parent_id is not None:
                continue
            fv = featurize("refund for my order", QueryContext(), candidate, kb, index, tax, gidf)
            assert fv.wnQc == fv.wnQ
            assert fv.wnAc == fv.wnA
            assert fv.semQc == fv.semQ
            assert fv.semAc == fv.semA
            assert fv.tfidfQc == fv.tfidfQ
            assert fv.tfidfAc == fv.tfidfA

    def test_vector_round_trip(self, setup):
        kb, index, tax, gidf = setup
        fv = featurize("table price", QueryContext(), kb.qa_pairs[0], kb, index, tax, gidf)
        arr = fv.as_array()
        assert arr.shape == (len(FEATURE_NAMES),)
        assert FeatureVector.from_array(arr) == fv

    def test_extractor_matches_one_shot(self, setup):
        kb, index, tax, gidf = setup
        ctx = QueryContext(previous_qa_id=2, previous_answer=kb.qa_pairs[1].answer)
        extractor = FeatureExtractor(kb, index, tax, gidf, "yes", ctx)
        for candidate in kb.qa_pairs:
            assert extractor.featurize(candidate) == featurize(
                "yes", ctx, candidate, kb, index, tax, gidf
            )

    def test_matches_golden_fixture(self, setup):
        kb, index, tax, gidf = setup
        fixture = json.loads(
            (Path(__file__).parent / "fixtures" / "golden-features.json").read_text()
        )
        assert fixture, "golden fixture must not be empty"
        for case in fixture:
            candidate = next(qa for qa in kb.qa_pairs if qa.id == case["candidateId"])
            ctx = (
                QueryContext(previous_answer=case["previousAnswer"])
                if case["previousAnswer"]
                else QueryContext()
            )
            fv = featurize(case["query"], ctx, candidate, kb, index, tax, gidf)
            for name, want in case["vector"].items():
                got = getattr(fv, name)
                assert got == pytest.approx(want, abs=1e-9), f"{case['name']}: {name}"

    def test_bounds_under_fuzz(self, setup):
        kb, index, tax, gidf = setup
        rng = random.Random(99)
        alphabet = "abcdefghijklmnopqrstuvwxyz '?!3"
        n_strings = 10_000
        texts = [
            "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 30)))
            for _ in range(n_strings)
        ]
        for text in texts:
            v = semantic_vector(text)
            norm = float(np.linalg.norm(v))
            assert norm == pytest.approx(1.0) or norm == 0.0
        for text in texts[:200]:
            fv = featurize(text, QueryContext(), kb.qa_pairs[0], kb, index, tax, gidf)
            for name in FEATURE_NAMES:
                value = getattr(fv, name)
                assert math.isfinite(value)
                if name.startswith("sem"):
                    assert -1.0 <= value <= 1.0 + 1e-12
                else:
                    assert value >= 0.0
