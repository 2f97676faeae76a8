"""Tokenization, normalization, preprocessing, and stream persistence."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexigrow.corpus import (
    RawDocument,
    StopwordSet,
    TokenStream,
    load_stopword_file,
    normalize,
    preprocess_corpus,
    read_corpus,
    read_token_stream,
    tokenize,
    write_token_stream,
)
from lexigrow.errors import CorpusError


class TestTokenize:
    def test_case_fold_and_punctuation_strip(self):
        assert tokenize("I had a Headache!") == ["i", "had", "a", "headache"]

    def test_empty_input(self):
        assert tokenize("") == []

    def test_underscore_survives(self):
        assert tokenize("pig_out, twice") == ["pig_out", "twice"]

    def test_accepts_raw_document(self):
        doc = RawDocument(id="d1", text="Hello there")
        assert tokenize(doc) == ["hello", "there"]

    def test_interior_punctuation_kept(self):
        assert tokenize("don't stop") == ["don't", "stop"]

    def test_all_punctuation_token_vanishes(self):
        assert tokenize("wait... !!! ok") == ["wait", "ok"]


class TestNormalize:
    def test_default_stopwords(self):
        assert normalize(["i", "had", "a", "headache"]) == ["headache"]

    def test_domain_stopwords(self):
        sw = StopwordSet(domain=frozenset({"test", "doctor", "symptom", "physician"}))
        assert normalize(["doctor", "said", "rest"], sw) == ["said", "rest"]

    def test_all_filtered(self):
        assert normalize(["ok", "123", "!!"], min_len=3) == []

    def test_min_len_validation(self):
        with pytest.raises(ValueError):
            normalize(["abc"], min_len=0)

    def test_embedded_digits_kept(self):
        sw = StopwordSet(general=frozenset(), domain=frozenset())
        assert normalize(["b12", "927"], sw, min_len=2) == ["b12"]

    def test_order_preserved(self):
        sw = StopwordSet(general=frozenset(), domain=frozenset())
        tokens = ["zebra", "apple", "mango"]
        assert normalize(tokens, sw) == tokens


class TestPreprocess:
    def test_single_document(self):
        stream = preprocess_corpus([RawDocument(id="1", text="I had a headache")])
        assert stream.tokens == ["headach"]
        assert stream.doc_boundaries == [0]

    def test_boundary_bookkeeping(self):
        docs = [
            RawDocument(id="1", text="severe headache today"),
            RawDocument(id="2", text="feeling dizzy"),
        ]
        stream = preprocess_corpus(docs)
        assert stream.doc_boundaries == [0, 3]
        assert stream.n_documents == 2

    def test_empty_document_keeps_slot(self):
        docs = [
            RawDocument(id="1", text="severe headache"),
            RawDocument(id="2", text="a of the"),
            RawDocument(id="3", text="dizzy spells"),
        ]
        stream = preprocess_corpus(docs)
        assert stream.n_documents == 3
        assert [len(d) for d in stream.documents()] == [2, 0, 2]

    def test_empty_corpus_is_not_an_error(self):
        stream = preprocess_corpus([])
        assert stream.tokens == []
        assert stream.n_documents == 0

    def test_deterministic(self):
        docs = [RawDocument(id=str(i), text=f"headache number {i} hurts") for i in range(50)]
        a = preprocess_corpus(docs)
        b = preprocess_corpus(docs)
        assert a.tokens == b.tokens and a.doc_boundaries == b.doc_boundaries

    def test_output_respects_stream_invariants(self):
        docs = [
            RawDocument(id="1", text="Chest PAIN!! 123 and b12 shots"),
            RawDocument(id="2", text="pig_out, twice; again"),
        ]
        stream = preprocess_corpus(docs)
        stream.validate()
        for t in stream.tokens:
            assert t == t.lower()
            assert len(t) >= 3
            assert any(c.isalpha() for c in t)


class TestReadCorpus:
    def test_one_document_per_line(self, tmp_path):
        path = tmp_path / "corpus.txt"
        path.write_text("first doc\nsecond doc\n", encoding="utf-8")
        docs = list(read_corpus(path))
        assert [d.text for d in docs] == ["first doc", "second doc"]
        assert len({d.id for d in docs}) == 2

    def test_directory_of_txt_files(self, tmp_path):
        (tmp_path / "b.txt").write_text("beta", encoding="utf-8")
        (tmp_path / "a.txt").write_text("alpha", encoding="utf-8")
        docs = list(read_corpus(tmp_path))
        assert [d.text for d in docs] == ["alpha", "beta"]

    def test_missing_path(self, tmp_path):
        with pytest.raises(CorpusError):
            list(read_corpus(tmp_path / "nope.txt"))

    def test_invalid_utf8_names_the_document(self, tmp_path):
        path = tmp_path / "corpus.txt"
        path.write_bytes(b"fine line\n\xff\xfe broken\n")
        with pytest.raises(CorpusError, match="corpus.txt:2"):
            list(read_corpus(path))


class TestStreamIO:
    def test_round_trip(self, tmp_path):
        stream = TokenStream(
            tokens=["one", "two", "three", "four"], doc_boundaries=[0, 2, 2]
        )
        path = tmp_path / "stream.txt"
        write_token_stream(stream, path)
        back = read_token_stream(path)
        assert back.tokens == stream.tokens
        assert back.doc_boundaries == stream.doc_boundaries

    def test_config_sidecar(self, tmp_path):
        path = tmp_path / "stream.txt"
        write_token_stream(TokenStream(tokens=["abc"]), path, config={"min_len": 3})
        assert (tmp_path / "stream.txt.meta.json").exists()

    def test_stopword_file(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("Doctor\n\ntest\n", encoding="utf-8")
        assert load_stopword_file(path) == frozenset({"doctor", "test"})


class TestStreamInvariants:
    def test_boundary_must_start_at_zero(self):
        with pytest.raises(CorpusError):
            TokenStream(tokens=["abc", "def"], doc_boundaries=[1]).validate()

    def test_boundaries_non_decreasing(self):
        with pytest.raises(CorpusError):
            TokenStream(tokens=["abc", "def"], doc_boundaries=[0, 2, 1]).validate()

    def test_document_spans_cover_stream(self):
        stream = TokenStream(tokens=list("abcdef"), doc_boundaries=[0, 2, 5])
        spans = list(stream.document_spans())
        assert spans == [(0, 2), (2, 5), (5, 6)]


@given(
    st.lists(
        st.text(alphabet="abcdefghij_ ", min_size=0, max_size=30),
        min_size=0,
        max_size=8,
    )
)
def test_document_count_equals_boundary_count(texts):
    docs = [RawDocument(id=str(i), text=t) for i, t in enumerate(texts)]
    stream = preprocess_corpus(docs)
    assert stream.n_documents == len(docs)
    stream.validate()
