"""Evaluation: confusion matrices, the metric suite, classification reports,
ROC/AUC, k-fold partitioning, and leakage-free cross-validation.

Metric definitions are the standard ones: precision = TP/(TP+FP) and
recall = TP/(TP+FN), with class 1 as the positive class. Zero-denominator
metrics return 0 and carry a degenerate flag instead of propagating NaN.
Weighted-average recall is accuracy by the binary identity; reports compute
the two through the same expression so the equality is exact in floats.

Fold aggregation pools the confusion matrix across folds (each sample is
tested exactly once); per-fold reports stay available for variance checks.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

import numpy as np

from .classifiers import ModelSpec, fit_model
from .errors import ConfigurationError, DataError
from .features import (
    IDF_NATURAL_LOG,
    NgramConfig,
    build_vocabulary,
    count_transform,
    fit_idf,
    tfidf_transform,
)


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def swap_classes(self) -> "ConfusionMatrix":
        """The same predictions with the 0/1 labeling inverted."""
        return ConfusionMatrix(tp=self.tn, fp=self.fn, fn=self.fp, tn=self.tp)


@dataclass(frozen=True)
class MetricsResult:
    accuracy: float
    precision: float
    recall: float
    f1: float
    degenerate: tuple[str, ...] = ()


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int
    degenerate: tuple[str, ...] = ()


@dataclass(frozen=True)
class RocCurve:
    """Points from (0,0) to (1,1); thresholds align with points (first +inf)."""

    points: tuple[tuple[float, float], ...]
    thresholds: tuple[float, ...]
    auc: float


@dataclass(frozen=True)
class ClassificationReport:
    class_1: ClassMetrics
    class_0: ClassMetrics
    macro_precision: float
    macro_recall: float
    macro_f1: float
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    accuracy: float
    confusion: ConfusionMatrix | None = None
    roc: RocCurve | None = None

    @property
    def total_support(self) -> int:
        return self.class_1.support + self.class_0.support


@dataclass(frozen=True)
class CvConfig:
    k: int
    seed: int = 0
    stratified: bool = True

    def __post_init__(self):
        if self.k < 2:
            raise ConfigurationError(f"k must be >= 2, got {self.k}")


def _check_binary(values, name: str) -> np.ndarray:
    array = np.asarray(values, dtype=np.int64)
    if array.ndim != 1:
        raise DataError(f"{name} must be 1-D")
    if not set(array.tolist()) <= {0, 1}:
        raise DataError(f"{name} must contain only 0/1 labels")
    return array


def confusion(y_true, y_pred) -> ConfusionMatrix:
    """Standard 2x2 cell counts with class 1 as positive."""
    true = _check_binary(y_true, "y_true")
    pred = _check_binary(y_pred, "y_pred")
    if len(true) != len(pred):
        raise DataError(f"length mismatch: {len(true)} vs {len(pred)}")
    if len(true) == 0:
        raise DataError("cannot build a confusion matrix from zero samples")
    return ConfusionMatrix(
        tp=int(np.sum((true == 1) & (pred == 1))),
        fp=int(np.sum((true == 0) & (pred == 1))),
        fn=int(np.sum((true == 1) & (pred == 0))),
        tn=int(np.sum((true == 0) & (pred == 0))),
    )


def metrics(cm: ConfusionMatrix) -> MetricsResult:
    """Accuracy, precision, recall, f1; zero denominators give 0 with a flag."""
    if cm.total == 0:
        raise DataError("confusion matrix is empty")
    degenerate = []
    if cm.tp + cm.fp > 0:
        precision = cm.tp / (cm.tp + cm.fp)
    else:
        precision = 0.0
        degenerate.append("precision")
    if cm.tp + cm.fn > 0:
        recall = cm.tp / (cm.tp + cm.fn)
    else:
        recall = 0.0
        degenerate.append("recall")
    if precision + recall > 0:
        f1 = 2 * precision * recall / (precision + recall)
    else:
        f1 = 0.0
        degenerate.append("f1")
    return MetricsResult(
        accuracy=(cm.tp + cm.tn) / cm.total,
        precision=precision,
        recall=recall,
        f1=f1,
        degenerate=tuple(degenerate),
    )


def class_metrics(cm: ConfusionMatrix, positive_class: int = 1) -> ClassMetrics:
    """Per-class metrics; class 0's are the metrics of the swapped matrix."""
    view = cm if positive_class == 1 else cm.swap_classes()
    result = metrics(view)
    return ClassMetrics(
        precision=result.precision,
        recall=result.recall,
        f1=result.f1,
        support=view.tp + view.fn,
        degenerate=result.degenerate,
    )


def classification_report(
    class_1: ClassMetrics,
    class_0: ClassMetrics,
    cm: ConfusionMatrix | None = None,
    roc: RocCurve | None = None,
) -> ClassificationReport:
    """Aggregate per-class metrics into macro and support-weighted averages.

    Accuracy equals weighted recall (the binary identity); when the confusion
    matrix is available both are computed as (TP+TN)/total so the equality is
    exact at full float precision.
    """
    s1, s0 = class_1.support, class_0.support
    total = s1 + s0
    if total <= 0:
        raise DataError("total support must be positive")

    def weighted(v1: float, v0: float) -> float:
        if s0 == 0:
            return v1
        if s1 == 0:
            return v0
        return (v1 * s1 + v0 * s0) / total

    if cm is not None:
        accuracy = (cm.tp + cm.tn) / cm.total
    else:
        accuracy = weighted(class_1.recall, class_0.recall)
    return ClassificationReport(
        class_1=class_1,
        class_0=class_0,
        macro_precision=(class_1.precision + class_0.precision) / 2,
        macro_recall=(class_1.recall + class_0.recall) / 2,
        macro_f1=(class_1.f1 + class_0.f1) / 2,
        weighted_precision=weighted(class_1.precision, class_0.precision),
        weighted_recall=accuracy,
        weighted_f1=weighted(class_1.f1, class_0.f1),
        accuracy=accuracy,
        confusion=cm,
        roc=roc,
    )


def report_from_predictions(y_true, y_pred, roc: RocCurve | None = None) -> ClassificationReport:
    cm = confusion(y_true, y_pred)
    return classification_report(
        class_1=class_metrics(cm, 1),
        class_0=class_metrics(cm, 0),
        cm=cm,
        roc=roc,
    )


def roc_curve(y_true, scores) -> RocCurve:
    """Threshold sweep over distinct scores descending; ties form one group.

    The AUC is the trapezoidal area, which equals the pairwise concordance
    statistic P(score+ > score-) + 0.5 * P(tie).
    """
    true = _check_binary(y_true, "y_true")
    values = np.asarray(scores, dtype=np.float64)
    if len(true) != len(values):
        raise DataError(f"length mismatch: {len(true)} vs {len(values)}")
    if not np.all(np.isfinite(values)):
        raise DataError("scores must be finite")
    n_pos = int(true.sum())
    n_neg = len(true) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise DataError("ROC/AUC is undefined when only one class is present")

    order = np.argsort(-values, kind="stable")
    sorted_scores = values[order]
    sorted_true = true[order]
    points = [(0.0, 0.0)]
    thresholds = [math.inf]
    tp = fp = 0
    auc = 0.0
    i = 0
    n = len(sorted_scores)
    while i < n:
        j = i
        while j < n and sorted_scores[j] == sorted_scores[i]:
            j += 1
        group_pos = int(sorted_true[i:j].sum())
        group_neg = (j - i) - group_pos
        prev_fpr, prev_tpr = points[-1]
        tp += group_pos
        fp += group_neg
        fpr = fp / n_neg
        tpr = tp / n_pos
        auc += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0
        points.append((fpr, tpr))
        thresholds.append(float(sorted_scores[i]))
        i = j
    return RocCurve(points=tuple(points), thresholds=tuple(thresholds), auc=auc)


def kfold_partition(n: int, labels, config: CvConfig) -> tuple[tuple[int, ...], ...]:
    """Split indices 0..n-1 into k disjoint folds of near-equal size.

    Stratified mode deals each class's shuffled members onto a rotating fold
    pointer, keeping per-fold class counts within one of an even share.
    """
    if config.k > n:
        raise DataError(f"k={config.k} exceeds sample count n={n}")
    rng = np.random.default_rng(config.seed)
    folds: list[list[int]] = [[] for _ in range(config.k)]
    if config.stratified:
        label_array = _check_binary(labels, "labels")
        if len(label_array) != n:
            raise DataError(f"labels length {len(label_array)} != n={n}")
        counter = 0
        for value in sorted(set(label_array.tolist())):
            members = np.nonzero(label_array == value)[0]
            if len(members) < config.k:
                warnings.warn(
                    f"class {value} has {len(members)} samples, fewer than k={config.k}",
                    stacklevel=2,
                )
            for position in rng.permutation(len(members)):
                folds[counter % config.k].append(int(members[position]))
                counter += 1
    else:
        permuted = rng.permutation(n)
        base = n // config.k
        extra = n % config.k
        start = 0
        for i in range(config.k):
            size = base + (1 if i < extra else 0)
            folds[i] = [int(v) for v in permuted[start : start + size]]
            start += size
    return tuple(tuple(sorted(fold)) for fold in folds)


@dataclass(frozen=True)
class FoldResult:
    fold_index: int
    test_indices: tuple[int, ...]
    report: ClassificationReport
    roc: RocCurve | None
    warning: str | None = None


@dataclass(frozen=True)
class CrossValidationResult:
    aggregate: ClassificationReport
    folds: tuple[FoldResult, ...]
    scores: tuple[float, ...]       # out-of-fold score per sample, input order
    predictions: tuple[int, ...]    # out-of-fold prediction per sample


def cross_validate(
    token_docs: Sequence[Sequence[str]],
    labels: Sequence[int],
    ngram: NgramConfig,
    model_spec: ModelSpec,
    cv: CvConfig,
    idf_mode: str = IDF_NATURAL_LOG,
    score_threshold: float = 0.5,
    workers: int = 1,
) -> CrossValidationResult:
    """k-fold evaluation with per-fold vocabulary fitting (no leakage).

    Each fold fits the vocabulary, IDF weights, and model on the training
    indices only, then scores the held-out fold. The aggregate report pools
    the confusion matrix and the out-of-fold scores across folds.
    """
    label_array = _check_binary(labels, "labels")
    n = len(token_docs)
    if len(label_array) != n:
        raise DataError(f"labels length {len(label_array)} != docs length {n}")
    folds = kfold_partition(n, label_array, cv)

    def run_fold(fold_index: int) -> tuple[FoldResult, np.ndarray]:
        test_indices = folds[fold_index]
        in_test = np.zeros(n, dtype=bool)
        in_test[list(test_indices)] = True
        train_indices = [i for i in range(n) if not in_test[i]]
        train_docs = [token_docs[i] for i in train_indices]
        test_docs = [token_docs[i] for i in test_indices]
        y_train = label_array[train_indices]
        y_test = label_array[list(test_indices)]

        vocab = build_vocabulary(train_docs, ngram)
        if model_spec.uses_counts:
            X_train = count_transform(train_docs, vocab)
            X_test = count_transform(test_docs, vocab)
        else:
            tfidf = fit_idf(vocab, idf_mode)
            X_train = tfidf_transform(train_docs, tfidf)
            X_test = tfidf_transform(test_docs, tfidf)
        model = fit_model(model_spec, X_train, y_train)
        fold_scores = np.array([model.predict_score(row) for row in X_test.rows])
        fold_preds = (fold_scores >= score_threshold).astype(np.int64)

        warning = None
        fold_roc = None
        if len(set(y_test.tolist())) < 2:
            warning = f"fold {fold_index}: single-class test fold, ROC omitted"
        else:
            fold_roc = roc_curve(y_test, fold_scores)
        report = report_from_predictions(y_test, fold_preds, roc=fold_roc)
        return (
            FoldResult(
                fold_index=fold_index,
                test_indices=test_indices,
                report=report,
                roc=fold_roc,
                warning=warning,
            ),
            fold_scores,
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_fold, range(cv.k)))
    else:
        outcomes = [run_fold(i) for i in range(cv.k)]

    scores = np.zeros(n)
    for fold_result, fold_scores in outcomes:
        scores[list(fold_result.test_indices)] = fold_scores
    predictions = (scores >= score_threshold).astype(np.int64)
    pooled_roc = roc_curve(label_array, scores)
    aggregate = report_from_predictions(label_array, predictions, roc=pooled_roc)
    return CrossValidationResult(
        aggregate=aggregate,
        folds=tuple(result for result, _ in outcomes),
        scores=tuple(float(s) for s in scores),
        predictions=tuple(int(p) for p in predictions),
    )


def round2(value: float) -> str:
    """Two-decimal half-up rendering used for table-style output."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def report_to_text(report: ClassificationReport) -> str:
    """Plain-text classification-report table (2-decimal rendering)."""
    lines = [
        f"{'':>14}{'precision':>10}{'recall':>10}{'f1-score':>10}{'support':>10}",
        "",
    ]
    for name, m in (("1", report.class_1), ("0", report.class_0)):
        lines.append(
            f"{name:>14}{round2(m.precision):>10}{round2(m.recall):>10}"
            f"{round2(m.f1):>10}{m.support:>10}"
        )
    total = report.total_support
    lines.append("")
    lines.append(f"{'accuracy':>14}{'':>20}{round2(report.accuracy):>10}{total:>10}")
    lines.append(
        f"{'macro avg':>14}{round2(report.macro_precision):>10}"
        f"{round2(report.macro_recall):>10}{round2(report.macro_f1):>10}{total:>10}"
    )
    lines.append(
        f"{'weighted avg':>14}{round2(report.weighted_precision):>10}"
        f"{round2(report.weighted_recall):>10}{round2(report.weighted_f1):>10}{total:>10}"
    )
    return "\n".join(lines) + "\n"


def report_to_csv(report: ClassificationReport) -> str:
    """CSV report: one row per class plus macro/weighted/accuracy rows.

    Metric cells hold full-precision reprs; the accuracy row stores its value
    in the f1 column (mirroring the usual text-table layout).
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["section", "precision", "recall", "f1", "support"])
    for name, m in (("class_1", report.class_1), ("class_0", report.class_0)):
        writer.writerow([name, repr(m.precision), repr(m.recall), repr(m.f1), m.support])
    total = report.total_support
    writer.writerow(["accuracy", "", "", repr(report.accuracy), total])
    writer.writerow(
        ["macro_avg", repr(report.macro_precision), repr(report.macro_recall),
         repr(report.macro_f1), total]
    )
    writer.writerow(
        ["weighted_avg", repr(report.weighted_precision), repr(report.weighted_recall),
         repr(report.weighted_f1), total]
    )
    return buffer.getvalue()


def roc_to_csv(curve: RocCurve) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["threshold", "fpr", "tpr"])
    for threshold, (fpr, tpr) in zip(curve.thresholds, curve.points):
        writer.writerow([repr(threshold), repr(fpr), repr(tpr)])
    return buffer.getvalue()
