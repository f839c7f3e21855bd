"""Four from-scratch binary classifiers behind one fit/score interface.

Naive Bayes consumes raw term counts (its probability model is defined over
counts); the tree, forest, and logistic models consume TF-IDF rows. All four
expose ``predict_score`` returning a probability-like score in [0, 1] for
class 1, which is what the ROC machinery consumes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import ConfigurationError, DataError
from ..features import FeatureMatrix, SparseVector
from ..lexicon import SentimentLabel
from .decision_tree import (
    DecisionTreeModel,
    TreeConfig,
    TreeLeaf,
    TreeNode,
    TreeSplit,
    dt_fit,
    gini_impurity,
)
from .logistic import LogisticConfig, LogisticModel, loss_and_gradient, lr_fit, sigmoid
from .naive_bayes import NaiveBayesModel, nb_fit
from .random_forest import ForestConfig, RandomForestModel, rf_fit

MODEL_KINDS = ("nb", "dt", "rf", "lr")

ClassifierModel = NaiveBayesModel | DecisionTreeModel | RandomForestModel | LogisticModel

_MODEL_CLASSES = {
    "nb": NaiveBayesModel,
    "dt": DecisionTreeModel,
    "rf": RandomForestModel,
    "lr": LogisticModel,
}

_COUNT_BASED_KINDS = frozenset({"nb"})


@dataclass(frozen=True)
class ModelSpec:
    """Model kind plus every hyperparameter any of the four kinds needs."""

    kind: str = "rf"
    alpha: float = 1.0
    max_depth: int | None = None
    min_samples_leaf: int = 1
    n_trees: int = 20
    features_per_split: int | None = None
    bootstrap: bool = True
    learning_rate: float = 0.1
    epochs: int = 500
    l2: float = 1e-4
    seed: int = 0

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ConfigurationError(
                f"model kind must be one of {MODEL_KINDS}, got {self.kind!r}"
            )

    @property
    def uses_counts(self) -> bool:
        return self.kind in _COUNT_BASED_KINDS


def fit_model(spec: ModelSpec, X: FeatureMatrix, y, workers: int = 1) -> ClassifierModel:
    """Fit the classifier named by ``spec.kind``.

    ``X`` must already be the representation that kind expects: raw counts
    when ``spec.uses_counts``, TF-IDF otherwise.
    """
    if spec.kind == "nb":
        return nb_fit(X, y, alpha=spec.alpha)
    if spec.kind == "dt":
        return dt_fit(
            X, y, TreeConfig(max_depth=spec.max_depth, min_samples_leaf=spec.min_samples_leaf)
        )
    if spec.kind == "rf":
        return rf_fit(
            X,
            y,
            ForestConfig(
                n_trees=spec.n_trees,
                features_per_split=spec.features_per_split,
                seed=spec.seed,
                bootstrap=spec.bootstrap,
                max_depth=spec.max_depth,
                min_samples_leaf=spec.min_samples_leaf,
            ),
            workers=workers,
        )
    return lr_fit(
        X,
        y,
        LogisticConfig(
            learning_rate=spec.learning_rate,
            epochs=spec.epochs,
            l2=spec.l2,
            seed=spec.seed,
        ),
    )


def predict_score(model: ClassifierModel, x: SparseVector) -> float:
    """Probability-like score for class 1; always in [0, 1]."""
    return model.predict_score(x)


def predict_label(
    model: ClassifierModel, x: SparseVector, threshold: float = 0.5
) -> SentimentLabel:
    """Positive iff the score reaches the threshold."""
    score = model.predict_score(x)
    return SentimentLabel.POSITIVE if score >= threshold else SentimentLabel.NEGATIVE


def save_model(model: ClassifierModel, sink) -> None:
    """Write the versioned JSON model file (exact float round-trip)."""
    payload = {"format": "sentipipe-model/1"}
    payload.update(model.to_dict())
    text = json.dumps(payload, indent=1)
    if isinstance(sink, str):
        with open(sink, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sink.write(text)


def load_model(source) -> ClassifierModel:
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            payload = json.load(fh)
    else:
        payload = json.load(source)
    if payload.get("format") != "sentipipe-model/1":
        raise DataError("not a sentipipe-model/1 file")
    kind = payload.get("kind")
    if kind not in _MODEL_CLASSES:
        raise DataError(f"unknown model kind {kind!r}")
    return _MODEL_CLASSES[kind].from_dict(payload)
