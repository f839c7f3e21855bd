"""Multinomial NB against a brute-force Fraction-arithmetic counting oracle."""

from fractions import Fraction

import numpy as np
import pytest

from sentipipe.classifiers import predict_label, predict_score
from sentipipe.classifiers.naive_bayes import NaiveBayesModel, nb_fit
from sentipipe.errors import DataError, TrainingError
from sentipipe.features import FeatureMatrix
from sentipipe.lexicon import SentimentLabel


def counts_matrix(rows, n_columns):
    sparse = tuple(
        tuple((j, float(v)) for j, v in enumerate(row) if v) for row in rows
    )
    return FeatureMatrix(rows=sparse, n_columns=n_columns)


def oracle_fit(rows, labels, alpha):
    """Likelihoods and priors by direct counting in exact rationals."""
    n_features = len(rows[0])
    likelihood = {}
    prior = {}
    for c in (0, 1):
        class_rows = [r for r, y in zip(rows, labels) if y == c]
        totals = [sum(r[j] for r in class_rows) for j in range(n_features)]
        grand = sum(totals)
        likelihood[c] = [
            Fraction(totals[j] + alpha, 1) / Fraction(grand + alpha * n_features)
            for j in range(n_features)
        ]
        prior[c] = Fraction(len(class_rows), len(rows))
    return prior, likelihood


def oracle_posterior(prior, likelihood, doc):
    joint = {}
    for c in (0, 1):
        value = prior[c]
        for j, count in enumerate(doc):
            value *= likelihood[c][j] ** count
        joint[c] = value
    total = joint[0] + joint[1]
    return joint[1] / total


class TestWorkedExample:
    # class 1 doc: "good good"; class 0 doc: "bad"; vocab (good, bad); alpha 1
    ROWS = [[2, 0], [0, 1]]
    LABELS = [1, 0]

    @pytest.fixture()
    def model(self):
        return nb_fit(counts_matrix(self.ROWS, 2), self.LABELS, alpha=1.0)

    def test_laplace_likelihoods(self, model):
        like = np.exp(model.log_likelihood)
        assert like[1, 0] == pytest.approx(3 / 4, abs=1e-12)   # P(good|1)
        assert like[1, 1] == pytest.approx(1 / 4, abs=1e-12)   # P(bad|1)
        assert like[0, 0] == pytest.approx(1 / 3, abs=1e-12)   # P(good|0)

    def test_balanced_priors(self, model):
        assert np.exp(model.log_prior).tolist() == [0.5, 0.5]

    def test_posterior_on_good(self, model):
        x = ((0, 1.0),)
        assert predict_score(model, x) == pytest.approx(0.375 / (0.375 + 1 / 6), abs=1e-12)
        assert predict_label(model, x) is SentimentLabel.POSITIVE


class TestInvariants:
    def test_likelihoods_sum_to_one_per_class(self):
        rng = np.random.default_rng(5)
        rows = rng.integers(0, 6, size=(8, 7)).tolist()
        labels = [0, 1] * 4
        model = nb_fit(counts_matrix(rows, 7), labels, alpha=0.7)
        sums = np.exp(model.log_likelihood).sum(axis=1)
        np.testing.assert_allclose(sums, 1.0, atol=1e-9)

    def test_matches_counting_oracle_exactly(self):
        rng = np.random.default_rng(99)
        for _ in range(30):
            n_docs = int(rng.integers(2, 7))
            n_features = int(rng.integers(1, 6))
            rows = rng.integers(0, 5, size=(n_docs, n_features)).tolist()
            labels = rng.integers(0, 2, n_docs).tolist()
            if len(set(labels)) < 2:
                labels[0], labels[1] = 0, 1
            model = nb_fit(counts_matrix(rows, n_features), labels, alpha=1.0)
            prior, likelihood = oracle_fit(rows, labels, alpha=1)
            for c in (0, 1):
                assert np.exp(model.log_prior[c]) == pytest.approx(
                    float(prior[c]), abs=1e-12
                )
                for j in range(n_features):
                    assert np.exp(model.log_likelihood[c, j]) == pytest.approx(
                        float(likelihood[c][j]), abs=1e-12
                    )
            doc = rng.integers(0, 4, n_features).tolist()
            sparse = tuple((j, float(v)) for j, v in enumerate(doc) if v)
            assert predict_score(model, sparse) == pytest.approx(
                float(oracle_posterior(prior, likelihood, doc)), abs=1e-12
            )

    def test_scores_in_unit_interval(self):
        rng = np.random.default_rng(3)
        rows = rng.integers(0, 4, size=(10, 5)).tolist()
        labels = ([0, 1] * 5)[:10]
        model = nb_fit(counts_matrix(rows, 5), labels)
        for _ in range(50):
            doc = rng.integers(0, 6, 5)
            sparse = tuple((j, float(v)) for j, v in enumerate(doc) if v)
            assert 0.0 <= predict_score(model, sparse) <= 1.0


class TestEdges:
    def test_single_class_is_error(self):
        with pytest.raises(TrainingError):
            nb_fit(counts_matrix([[1], [2]], 1), [1, 1])

    def test_negative_alpha_rejected(self):
        with pytest.raises(TrainingError):
            nb_fit(counts_matrix([[1], [2]], 1), [1, 0], alpha=-0.1)

    def test_alpha_zero_unseen_term_zeroes_class(self):
        # "bad" never appears in class 1: with alpha=0 its likelihood is 0,
        # so any document containing it gets posterior 0 for class 1.
        model = nb_fit(counts_matrix([[2, 0], [1, 1]], 2), [1, 0], alpha=0.0)
        assert predict_score(model, ((1, 1.0),)) == 0.0

    def test_alpha_zero_both_classes_zero_falls_back_to_prior(self):
        # the feature is unseen in either class
        model = nb_fit(counts_matrix([[2, 0], [1, 0]], 2), [1, 0], alpha=0.0)
        assert predict_score(model, ((1, 2.0),)) == pytest.approx(0.5)

    def test_out_of_range_index_is_error(self):
        model = nb_fit(counts_matrix([[1], [2]], 1), [1, 0])
        with pytest.raises(DataError):
            predict_score(model, ((3, 1.0),))

    def test_serialization_round_trip(self):
        model = nb_fit(counts_matrix([[2, 1], [0, 3]], 2), [1, 0], alpha=0.5)
        clone = NaiveBayesModel.from_dict(model.to_dict())
        x = ((0, 2.0), (1, 1.0))
        assert clone.predict_score(x) == model.predict_score(x)
