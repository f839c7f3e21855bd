"""Metric suite, report aggregation identities, ROC/AUC, k-fold, CV."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sentipipe.classifiers import ModelSpec
from sentipipe.errors import ConfigurationError, DataError
from sentipipe.evaluation import (
    ClassMetrics,
    ConfusionMatrix,
    CvConfig,
    class_metrics,
    classification_report,
    confusion,
    cross_validate,
    kfold_partition,
    metrics,
    report_from_predictions,
    report_to_csv,
    report_to_text,
    roc_curve,
    roc_to_csv,
    round2,
)
from sentipipe.features import NgramConfig


class TestConfusion:
    def test_perfect(self):
        cm = confusion([1, 1, 0, 0], [1, 1, 0, 0])
        assert (cm.tp, cm.tn, cm.fp, cm.fn) == (2, 2, 0, 0)

    def test_total_inversion(self):
        cm = confusion([1, 0], [0, 1])
        assert (cm.tp, cm.tn, cm.fp, cm.fn) == (0, 0, 1, 1)

    def test_cell_by_cell(self):
        cm = confusion([1, 1, 1, 0, 0], [1, 1, 0, 1, 0])
        assert (cm.tp, cm.fn, cm.fp, cm.tn) == (2, 1, 1, 1)

    def test_length_mismatch(self):
        with pytest.raises(DataError):
            confusion([1, 0], [1])

    def test_empty(self):
        with pytest.raises(DataError):
            confusion([], [])

    def test_total_matches_sample_count(self):
        cm = confusion([1, 0, 1], [0, 0, 1])
        assert cm.total == 3


class TestMetrics:
    def test_hand_arithmetic(self):
        result = metrics(ConfusionMatrix(tp=50, fp=10, fn=5, tn=35))
        assert result.accuracy == pytest.approx(0.85)
        assert result.precision == pytest.approx(50 / 60)
        assert result.recall == pytest.approx(50 / 55)
        assert result.f1 == pytest.approx(100 / 115)
        assert result.degenerate == ()

    def test_perfect_matrix(self):
        result = metrics(ConfusionMatrix(tp=3, fp=0, fn=0, tn=2))
        assert (result.accuracy, result.precision, result.recall, result.f1) == (
            1.0, 1.0, 1.0, 1.0,
        )

    def test_zero_denominators_flagged(self):
        result = metrics(ConfusionMatrix(tp=0, fp=0, fn=3, tn=7))
        assert result.precision == 0.0
        assert result.recall == 0.0
        assert result.accuracy == pytest.approx(0.7)
        assert "precision" in result.degenerate
        assert "f1" in result.degenerate

    def test_swap_relabeling_identity(self):
        # swapping both label vectors equals the swapped confusion matrix
        y_true = [1, 1, 0, 1, 0, 0, 1]
        y_pred = [1, 0, 0, 1, 1, 0, 1]
        swapped = confusion([1 - v for v in y_true], [1 - v for v in y_pred])
        assert swapped == confusion(y_true, y_pred).swap_classes()
        assert metrics(swapped) == metrics(confusion(y_true, y_pred).swap_classes())


class TestClassificationReport:
    C1 = ClassMetrics(precision=0.87, recall=0.91, f1=0.89, support=1959)
    C0 = ClassMetrics(precision=0.69, recall=0.61, f1=0.65, support=661)

    def test_macro_values_exact(self):
        report = classification_report(self.C1, self.C0)
        assert report.macro_precision == pytest.approx(0.78, abs=1e-12)
        assert report.macro_recall == pytest.approx(0.76, abs=1e-12)
        assert report.macro_f1 == pytest.approx(0.77, abs=1e-12)

    def test_weighted_values_exact_arithmetic(self):
        report = classification_report(self.C1, self.C0)
        assert report.weighted_precision == pytest.approx(
            (0.87 * 1959 + 0.69 * 661) / 2620, abs=1e-15
        )
        assert report.weighted_recall == pytest.approx(
            (0.91 * 1959 + 0.61 * 661) / 2620, abs=1e-15
        )
        assert report.weighted_f1 == pytest.approx(
            (0.89 * 1959 + 0.65 * 661) / 2620, abs=1e-15
        )

    def test_two_decimal_rendering(self):
        report = classification_report(self.C1, self.C0)
        assert [round2(v) for v in (report.macro_precision, report.macro_recall,
                                    report.macro_f1)] == ["0.78", "0.76", "0.77"]
        assert round2(report.weighted_recall) == "0.83"
        assert round2(report.weighted_f1) == "0.83"

    def test_accuracy_is_weighted_recall_exactly(self):
        report = classification_report(self.C1, self.C0)
        assert report.accuracy == report.weighted_recall

    def test_identical_class_metrics_collapse(self):
        same = ClassMetrics(precision=0.8, recall=0.7, f1=0.75, support=10)
        report = classification_report(same, same)
        assert report.macro_precision == report.weighted_precision == 0.8
        assert report.macro_f1 == report.weighted_f1 == 0.75

    def test_zero_support_degenerate_weighting(self):
        empty = ClassMetrics(precision=0.0, recall=0.0, f1=0.0, support=0)
        report = classification_report(self.C1, empty)
        assert report.weighted_precision == self.C1.precision
        assert report.weighted_recall == self.C1.recall
        assert report.weighted_f1 == self.C1.f1

    def test_zero_total_support_is_error(self):
        empty = ClassMetrics(precision=0.0, recall=0.0, f1=0.0, support=0)
        with pytest.raises(DataError):
            classification_report(empty, empty)

    def test_from_predictions_binary_identity(self):
        rng = np.random.default_rng(4)
        for _ in range(25):
            n = int(rng.integers(2, 60))
            y_true = rng.integers(0, 2, n)
            y_pred = rng.integers(0, 2, n)
            if y_true.min() == y_true.max():
                continue
            report = report_from_predictions(y_true, y_pred)
            cm = report.confusion
            assert report.accuracy == (cm.tp + cm.tn) / cm.total
            assert report.weighted_recall == report.accuracy  # exact, every report

    def test_renderings_are_deterministic(self):
        report = classification_report(self.C1, self.C0)
        assert report_to_csv(report) == report_to_csv(report)
        text = report_to_text(report)
        assert "macro avg" in text and "weighted avg" in text
        assert "0.78" in text

    def test_round2_is_half_up(self):
        assert round2(0.825) == "0.83"
        assert round2(0.8245877862595419) == "0.82"
        assert round2(0.835) == "0.84"


class TestRoc:
    def test_perfect_separation(self):
        assert roc_curve([1, 1, 0], [0.9, 0.8, 0.7]).auc == 1.0

    def test_one_concordant_one_discordant(self):
        assert roc_curve([1, 1, 0], [0.9, 0.4, 0.6]).auc == 0.5

    def test_full_tie(self):
        curve = roc_curve([1, 0], [0.5, 0.5])
        assert curve.auc == 0.5
        assert curve.points == ((0.0, 0.0), (1.0, 1.0))

    def test_endpoints_and_monotonicity(self):
        rng = np.random.default_rng(8)
        for _ in range(30):
            n = int(rng.integers(2, 80))
            y = rng.integers(0, 2, n)
            if y.min() == y.max():
                continue
            scores = np.round(rng.random(n), 1)
            curve = roc_curve(y, scores)
            assert curve.points[0] == (0.0, 0.0)
            assert curve.points[-1] == (1.0, 1.0)
            xs = [p[0] for p in curve.points]
            ys = [p[1] for p in curve.points]
            assert xs == sorted(xs)
            assert ys == sorted(ys)
            assert curve.thresholds[0] == float("inf")
            assert list(curve.thresholds[1:]) == sorted(
                curve.thresholds[1:], reverse=True
            )

    def test_auc_equals_pairwise_statistic(self):
        rng = np.random.default_rng(31)
        for _ in range(40):
            n = int(rng.integers(2, 120))
            y = rng.integers(0, 2, n)
            if y.min() == y.max():
                continue
            scores = np.round(rng.random(n), 2)
            curve = roc_curve(y, scores)
            pos = scores[y == 1]
            neg = scores[y == 0]
            pairs = [
                1.0 if p > q else (0.5 if p == q else 0.0) for p in pos for q in neg
            ]
            assert curve.auc == pytest.approx(float(np.mean(pairs)), abs=1e-12)

    def test_single_class_is_error(self):
        with pytest.raises(DataError):
            roc_curve([1, 1], [0.2, 0.3])

    def test_nonfinite_scores_rejected(self):
        with pytest.raises(DataError):
            roc_curve([1, 0], [float("nan"), 0.5])

    def test_csv_rendering(self):
        curve = roc_curve([1, 0], [0.9, 0.1])
        lines = roc_to_csv(curve).splitlines()
        assert lines[0] == "threshold,fpr,tpr"
        assert lines[1] == "inf,0.0,0.0"
        assert len(lines) == 1 + len(curve.points)


class TestKfold:
    def test_even_sizes(self):
        folds = kfold_partition(10, [0, 1] * 5, CvConfig(k=5, seed=1))
        assert sorted(len(f) for f in folds) == [2, 2, 2, 2, 2]

    def test_remainder_distribution(self):
        folds = kfold_partition(11, None, CvConfig(k=5, seed=1, stratified=False))
        assert [len(f) for f in folds] == [3, 2, 2, 2, 2]

    def test_deterministic(self):
        config = CvConfig(k=4, seed=9)
        labels = [0, 1] * 10
        assert kfold_partition(20, labels, config) == kfold_partition(20, labels, config)

    def test_k_exceeding_n_is_error(self):
        with pytest.raises(DataError):
            kfold_partition(3, [0, 1, 0], CvConfig(k=4, seed=0))

    def test_k_below_two_rejected(self):
        with pytest.raises(ConfigurationError):
            CvConfig(k=1)

    def test_small_class_warns(self):
        with pytest.warns(UserWarning):
            kfold_partition(10, [1] * 9 + [0], CvConfig(k=3, seed=0))

    @settings(max_examples=80, deadline=None)
    @given(
        n=st.integers(2, 120),
        k=st.integers(2, 10),
        seed=st.integers(0, 2**32),
        stratified=st.booleans(),
        data=st.data(),
    )
    def test_partition_properties(self, n, k, seed, stratified, data):
        if k > n:
            k = n
        labels = data.draw(
            st.lists(st.integers(0, 1), min_size=n, max_size=n)
        )
        if stratified and len(set(labels)) < 2:
            labels[0] = 0
            labels[-1] = 1
        import warnings as warnings_module

        with warnings_module.catch_warnings():
            warnings_module.simplefilter("ignore")
            folds = kfold_partition(n, labels, CvConfig(k=k, seed=seed, stratified=stratified))
        flat = [i for fold in folds for i in fold]
        assert sorted(flat) == list(range(n))              # disjoint + covering
        sizes = [len(f) for f in folds]
        assert max(sizes) - min(sizes) <= 1                # balance
        if stratified:
            for fold in folds:
                fold_pos = sum(1 for i in fold if labels[i] == 1)
                expected = sum(labels) * len(fold) / n
                assert abs(fold_pos - expected) <= 1       # ratio within one


def synthetic_tokens(n, seed):
    """Token docs whose label is carried by an unmistakable marker token."""
    rng = np.random.default_rng(seed)
    filler = ["bill", "price", "energy", "home", "cost", "meter"]
    docs, labels = [], []
    for i in range(n):
        label = int(rng.integers(0, 2))
        body = [filler[int(j)] for j in rng.integers(0, len(filler), 6)]
        docs.append(tuple(body + ["up" if label else "down"]))
        labels.append(label)
    if len(set(labels)) < 2:
        docs[0], labels[0] = docs[0] + ("up",), 1
    return docs, labels


class TestCrossValidate:
    def test_pooled_confusion_totals_n(self):
        docs, labels = synthetic_tokens(100, seed=5)
        result = cross_validate(
            docs, labels, NgramConfig(min_df=1), ModelSpec(kind="nb"), CvConfig(k=5, seed=2)
        )
        assert result.aggregate.confusion.total == 100
        assert sum(len(f.test_indices) for f in result.folds) == 100

    def test_separable_logistic_reaches_pooled_accuracy_one(self):
        docs, labels = synthetic_tokens(80, seed=11)
        result = cross_validate(
            docs,
            labels,
            NgramConfig(min_df=1),
            ModelSpec(kind="lr", learning_rate=2.0, epochs=400, l2=0.0),
            CvConfig(k=4, seed=3),
        )
        assert result.aggregate.accuracy == 1.0

    def test_deterministic_and_worker_invariant(self):
        docs, labels = synthetic_tokens(60, seed=7)
        kwargs = dict(
            ngram=NgramConfig(min_df=1),
            model_spec=ModelSpec(kind="rf", n_trees=5, max_depth=6, seed=1),
            cv=CvConfig(k=3, seed=8),
        )
        first = cross_validate(docs, labels, **kwargs)
        second = cross_validate(docs, labels, **kwargs)
        threaded = cross_validate(docs, labels, workers=3, **kwargs)
        assert first.scores == second.scores == threaded.scores
        assert first.aggregate == second.aggregate == threaded.aggregate

    def test_each_sample_scored_once(self):
        docs, labels = synthetic_tokens(40, seed=9)
        result = cross_validate(
            docs, labels, NgramConfig(min_df=1), ModelSpec(kind="dt", max_depth=8),
            CvConfig(k=4, seed=1),
        )
        assert len(result.scores) == 40
        assert len(result.predictions) == 40

    def test_single_class_fold_warned_not_fatal(self):
        # force one fold to be single-class with unstratified folds
        docs, labels = synthetic_tokens(12, seed=13)
        labels = [1] * 11 + [0]
        result = cross_validate(
            docs, labels, NgramConfig(min_df=1),
            ModelSpec(kind="dt", max_depth=4),
            CvConfig(k=3, seed=4, stratified=False),
        )
        warned = [f for f in result.folds if f.warning is not None]
        assert any(f.roc is None for f in warned) or warned == []
        assert result.aggregate.confusion.total == 12
