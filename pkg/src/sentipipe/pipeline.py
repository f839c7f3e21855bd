"""End-to-end orchestration shared by the CLI stages and the benchmark.

Featurization is always fit on training tokens only; holdout evaluation and
feature comparisons reuse the same train/test membership across model kinds
so accuracies are comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classifiers import ClassifierModel, ModelSpec, fit_model
from .corpus import LabeledDocument, SplitSpec, split_indices
from .errors import DataError
from .evaluation import ClassificationReport, RocCurve, report_from_predictions, roc_curve
from .features import (
    IDF_NATURAL_LOG,
    FeatureMatrix,
    NgramConfig,
    Vocabulary,
    build_vocabulary,
    count_transform,
    fit_idf,
    tfidf_transform,
)
from .textprep import CleaningConfig, DEFAULT_CLEANING, preprocess


def tokens_for_documents(
    docs: Sequence[LabeledDocument],
    cleaning: CleaningConfig = DEFAULT_CLEANING,
    stopwords: frozenset[str] = frozenset(),
) -> list[tuple[str, ...]]:
    """Use labeling-stage tokens when present, else re-run preprocessing."""
    return [
        doc.tokens if doc.tokens is not None else preprocess(doc.text, cleaning, stopwords)
        for doc in docs
    ]


def build_train_test_matrices(
    train_tokens: Sequence[Sequence[str]],
    test_tokens: Sequence[Sequence[str]],
    ngram: NgramConfig,
    idf_mode: str,
    uses_counts: bool,
) -> tuple[FeatureMatrix, FeatureMatrix, Vocabulary]:
    """Fit the vocabulary (and IDF when applicable) on training tokens only."""
    vocab = build_vocabulary(train_tokens, ngram)
    if uses_counts:
        return count_transform(train_tokens, vocab), count_transform(test_tokens, vocab), vocab
    model = fit_idf(vocab, idf_mode)
    return tfidf_transform(train_tokens, model), tfidf_transform(test_tokens, model), vocab


@dataclass(frozen=True)
class HoldoutResult:
    spec: ModelSpec
    model: ClassifierModel
    accuracy: float
    report: ClassificationReport
    roc: RocCurve | None


def holdout_evaluate(
    token_docs: Sequence[Sequence[str]],
    labels: Sequence[int],
    specs: Sequence[ModelSpec],
    split: SplitSpec,
    ngram: NgramConfig = NgramConfig(min_df=2),
    idf_mode: str = IDF_NATURAL_LOG,
    workers: int = 1,
) -> dict[str, HoldoutResult]:
    """Train each spec on the same split and score the shared holdout."""
    if len(token_docs) != len(labels):
        raise DataError("token/label length mismatch")
    train_idx, test_idx = split_indices(list(labels), split)
    label_array = np.asarray(labels, dtype=np.int64)
    y_train = label_array[list(train_idx)]
    y_test = label_array[list(test_idx)]
    train_tokens = [token_docs[i] for i in train_idx]
    test_tokens = [token_docs[i] for i in test_idx]

    results: dict[str, HoldoutResult] = {}
    matrices: dict[bool, tuple[FeatureMatrix, FeatureMatrix]] = {}
    for spec in specs:
        if spec.uses_counts not in matrices:
            X_train, X_test, _ = build_train_test_matrices(
                train_tokens, test_tokens, ngram, idf_mode, spec.uses_counts
            )
            matrices[spec.uses_counts] = (X_train, X_test)
        X_train, X_test = matrices[spec.uses_counts]
        model = fit_model(spec, X_train, y_train, workers=workers)
        scores = np.array([model.predict_score(row) for row in X_test.rows])
        predictions = (scores >= 0.5).astype(np.int64)
        curve = None
        if 0 < int(y_test.sum()) < len(y_test):
            curve = roc_curve(y_test, scores)
        report = report_from_predictions(y_test, predictions, roc=curve)
        results[spec.kind] = HoldoutResult(
            spec=spec,
            model=model,
            accuracy=report.accuracy,
            report=report,
            roc=curve,
        )
    return results
