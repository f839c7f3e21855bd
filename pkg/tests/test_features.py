"""N-grams, vocabulary, TF / IDF / TF-IDF values, and model serialization."""

import io
import math

import pytest
from hypothesis import given, settings, strategies as st

from sentipipe.errors import ConfigurationError, DataError, SchemaError
from sentipipe.features import (
    FeatureMatrix,
    NgramConfig,
    Vocabulary,
    build_vocabulary,
    count_vector,
    extract_ngrams,
    fit_idf,
    load_tfidf_model,
    save_tfidf_model,
    term_frequency,
    tfidf_transform,
)

token_lists = st.lists(
    st.lists(st.sampled_from("abcdef"), max_size=12).map(tuple), min_size=1, max_size=15
)


class TestNgrams:
    def test_bigrams(self):
        assert extract_ngrams(("a", "b", "c"), NgramConfig(2, 2)) == ["a b", "b c"]

    def test_union_of_unigrams_and_bigrams(self):
        assert extract_ngrams(("a", "b", "c"), NgramConfig(1, 2)) == [
            "a", "b", "c", "a b", "b c",
        ]

    def test_too_short_for_window(self):
        assert extract_ngrams(("a",), NgramConfig(2, 2)) == []

    def test_bounds_validated(self):
        with pytest.raises(ConfigurationError):
            NgramConfig(0, 1)
        with pytest.raises(ConfigurationError):
            NgramConfig(2, 1)
        with pytest.raises(ConfigurationError):
            NgramConfig(1, 4)
        with pytest.raises(ConfigurationError):
            NgramConfig(1, 1, min_df=0)


class TestVocabulary:
    def test_first_occurrence_order_and_df(self):
        vocab = build_vocabulary([("a", "a", "b"), ("b", "c")], NgramConfig(min_df=1))
        assert vocab.index == {"a": 0, "b": 1, "c": 2}
        assert vocab.df == (1, 2, 1)  # df counts documents, not occurrences
        assert vocab.n_docs == 2

    def test_min_df_filter_reindexes(self):
        vocab = build_vocabulary([("a", "a", "b"), ("b", "c")], NgramConfig(min_df=2))
        assert vocab.index == {"b": 0}
        assert vocab.size == 1

    def test_single_doc(self):
        vocab = build_vocabulary([("x",)], NgramConfig(min_df=1))
        assert vocab.size == 1
        assert vocab.df == (1,)

    def test_empty_vocabulary_is_configuration_error(self):
        with pytest.raises(ConfigurationError):
            build_vocabulary([("a",), ("b",)], NgramConfig(min_df=3))

    def test_no_docs_is_data_error(self):
        with pytest.raises(DataError):
            build_vocabulary([], NgramConfig())

    @given(token_lists)
    def test_df_bounded_by_n_docs(self, docs):
        try:
            vocab = build_vocabulary(docs, NgramConfig(min_df=1))
        except ConfigurationError:
            return  # all docs empty
        assert all(1 <= df <= vocab.n_docs for df in vocab.df)
        assert sorted(vocab.index.values()) == list(range(vocab.size))


class TestTermFrequency:
    def test_paper_scale_document(self):
        # 250-token document where the term occurs 10 times: tf = 0.04.
        doc = ("like",) * 10 + ("w",) * 240
        vocab = build_vocabulary([doc], NgramConfig(min_df=1))
        tf = dict(term_frequency(doc, vocab))
        assert tf[vocab.index["like"]] == 10 / 250 == 0.04

    def test_symmetric_counts(self):
        vocab = build_vocabulary([("a", "b")], NgramConfig(min_df=1))
        tf = dict(term_frequency(("a", "a", "b", "b"), vocab))
        assert tf[vocab.index["a"]] == 0.5
        assert tf[vocab.index["b"]] == 0.5

    def test_out_of_vocabulary_inflates_denominator(self):
        vocab = build_vocabulary([("a",)], NgramConfig(min_df=1))
        tf = dict(term_frequency(("a", "z"), vocab))
        assert tf[vocab.index["a"]] == 0.5

    def test_empty_doc_gives_empty_vector(self):
        vocab = build_vocabulary([("a",)], NgramConfig(min_df=1))
        assert term_frequency((), vocab) == ()

    @given(token_lists)
    def test_tf_sums_to_at_most_one(self, docs):
        try:
            vocab = build_vocabulary(docs, NgramConfig(min_df=1))
        except ConfigurationError:
            return
        for doc in docs:
            total = sum(v for _, v in term_frequency(doc, vocab))
            assert total <= 1.0 + 1e-12
            if doc:  # fitting corpus has no out-of-vocabulary tokens
                assert total == pytest.approx(1.0)


class TestIdf:
    def _vocab(self, n_docs: int, df: int) -> Vocabulary:
        return Vocabulary(index={"t": 0}, df=(df,), n_docs=n_docs)

    def test_raw_ratio_paper_example(self):
        model = fit_idf(self._vocab(50000, 500), "raw_ratio")
        assert model.idf[0] == 100.0

    def test_natural_log_of_same_ratio(self):
        model = fit_idf(self._vocab(50000, 500), "natural_log")
        assert model.idf[0] == pytest.approx(math.log(100), abs=1e-12)

    def test_term_in_every_doc_has_zero_idf_in_log_modes(self):
        for mode in ("natural_log", "log10"):
            assert fit_idf(self._vocab(7, 7), mode).idf[0] == 0.0

    def test_log10_mode(self):
        assert fit_idf(self._vocab(1000, 10), "log10").idf[0] == pytest.approx(2.0)

    def test_unknown_mode_rejected(self):
        with pytest.raises(ConfigurationError):
            fit_idf(self._vocab(10, 5), "log2")

    @given(st.integers(1, 500), st.data())
    def test_idf_nonnegative_in_log_modes(self, n_docs, data):
        df = data.draw(st.integers(1, n_docs))
        for mode in ("natural_log", "log10"):
            assert fit_idf(self._vocab(n_docs, df), mode).idf[0] >= 0.0


class TestTfidfTransform:
    def test_paper_product_raw_ratio(self):
        doc = ("like",) * 10 + ("w",) * 240
        vocab = Vocabulary(index={"like": 0}, df=(500,), n_docs=50000)
        model = fit_idf(vocab, "raw_ratio")
        matrix = tfidf_transform([doc], model)
        value = dict(matrix.rows[0])[0]
        assert value == 4.0  # 0.04 * 100, exactly

    def test_natural_log_product(self):
        doc = ("like",) * 10 + ("w",) * 240
        vocab = Vocabulary(index={"like": 0}, df=(500,), n_docs=50000)
        model = fit_idf(vocab, "natural_log")
        value = dict(tfidf_transform([doc], model).rows[0])[0]
        assert value == pytest.approx(0.04 * math.log(100), abs=1e-12)

    def test_empty_doc_gives_empty_row(self):
        vocab = build_vocabulary([("a",)], NgramConfig(min_df=1))
        matrix = tfidf_transform([()], fit_idf(vocab))
        assert matrix.rows == ((),)

    def test_zero_idf_entries_not_stored(self):
        vocab = build_vocabulary([("a", "b"), ("a",)], NgramConfig(min_df=1))
        matrix = tfidf_transform([("a", "b")], fit_idf(vocab))
        matrix.validate()
        stored = dict(matrix.rows[0])
        assert vocab.index["a"] not in stored  # df == n_docs -> idf 0
        assert vocab.index["b"] in stored

    def test_no_vocabulary_hits_yields_empty_row(self):
        vocab = build_vocabulary([("a",), ("a", "b")], NgramConfig(min_df=1))
        matrix = tfidf_transform([("z", "q")], fit_idf(vocab))
        assert matrix.rows[0] == ()

    @given(token_lists)
    @settings(max_examples=60)
    def test_indices_always_in_range(self, docs):
        try:
            vocab = build_vocabulary(docs, NgramConfig(min_df=1))
        except ConfigurationError:
            return
        matrix = tfidf_transform(docs, fit_idf(vocab))
        matrix.validate()
        counts = [count_vector(doc, vocab) for doc in docs]
        for row in counts:
            for j, value in row:
                assert 0 <= j < vocab.size
                assert value == int(value) >= 1


class TestSerialization:
    def test_round_trip_bit_exact(self):
        docs = [("a", "b", "a"), ("b", "c"), ("a c term",)]
        vocab = build_vocabulary(docs, NgramConfig(1, 1, min_df=1))
        model = fit_idf(vocab, "natural_log")
        buffer = io.StringIO()
        save_tfidf_model(model, buffer)
        loaded = load_tfidf_model(io.StringIO(buffer.getvalue()))
        assert loaded.vocabulary.index == vocab.index
        assert loaded.vocabulary.df == vocab.df
        assert loaded.vocabulary.n_docs == vocab.n_docs
        assert loaded.vocabulary.ngram == vocab.ngram
        assert loaded.idf == model.idf  # exact float equality via repr round-trip
        assert loaded.idf_mode == model.idf_mode

    def test_bad_format_tag_rejected(self):
        with pytest.raises(SchemaError):
            load_tfidf_model(io.StringIO("not-a-model\n"))

    def test_matrix_validation_rejects_bad_rows(self):
        with pytest.raises(DataError):
            FeatureMatrix(rows=(((1, 0.5), (0, 0.5)),), n_columns=2).validate()
        with pytest.raises(DataError):
            FeatureMatrix(rows=(((0, 0.0),),), n_columns=1).validate()
        with pytest.raises(DataError):
            FeatureMatrix(rows=(((5, 1.0),),), n_columns=2).validate()
