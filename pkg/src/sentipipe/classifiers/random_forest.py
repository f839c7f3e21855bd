"""Bagged random forest over the decision tree learner.

Each tree gets its own RNG stream seeded with (master seed + tree index), so
fits are bit-identical regardless of how many workers train trees in
parallel. The stream is consumed in a fixed order: the bootstrap resample
first, then one feature subset per node in depth-first build order.

Forest scores are the mean of per-tree leaf probabilities rather than a hard
majority vote, which keeps ROC input granular; thresholding per tree recovers
the classic voting behaviour.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..errors import TrainingError
from ..features import FeatureMatrix, SparseVector
from .base import as_dense_row
from .decision_tree import DecisionTreeModel, TreeConfig, dt_fit


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 20
    features_per_split: int | None = None  # None -> ceil(sqrt(V))
    seed: int = 0
    bootstrap: bool = True
    max_depth: int | None = None
    min_samples_leaf: int = 1

    def __post_init__(self):
        if self.n_trees < 1:
            raise TrainingError(f"n_trees must be >= 1, got {self.n_trees}")
        if self.features_per_split is not None and self.features_per_split < 1:
            raise TrainingError(
                f"features_per_split must be >= 1, got {self.features_per_split}"
            )


@dataclass(frozen=True)
class RandomForestModel:
    trees: tuple[DecisionTreeModel, ...]
    n_features: int
    config: ForestConfig

    def predict_score(self, x: SparseVector) -> float:
        row = as_dense_row(x, self.n_features)
        return float(
            sum(tree.score_dense_row(row) for tree in self.trees) / len(self.trees)
        )

    def to_dict(self) -> dict:
        return {
            "kind": "rf",
            "n_features": self.n_features,
            "n_trees": self.config.n_trees,
            "features_per_split": self.config.features_per_split,
            "seed": self.config.seed,
            "bootstrap": self.config.bootstrap,
            "max_depth": self.config.max_depth,
            "min_samples_leaf": self.config.min_samples_leaf,
            "trees": [tree.to_dict() for tree in self.trees],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "RandomForestModel":
        return cls(
            trees=tuple(DecisionTreeModel.from_dict(t) for t in payload["trees"]),
            n_features=int(payload["n_features"]),
            config=ForestConfig(
                n_trees=int(payload["n_trees"]),
                features_per_split=payload["features_per_split"],
                seed=int(payload["seed"]),
                bootstrap=bool(payload["bootstrap"]),
                max_depth=payload["max_depth"],
                min_samples_leaf=int(payload["min_samples_leaf"]),
            ),
        )


def _resolve_features_per_split(config: ForestConfig, n_features: int) -> int:
    if config.features_per_split is None:
        return min(n_features, math.ceil(math.sqrt(n_features)))
    if config.features_per_split > n_features:
        raise TrainingError(
            f"features_per_split={config.features_per_split} exceeds V={n_features}"
        )
    return config.features_per_split


def _fit_one_tree(
    tree_index: int,
    X: FeatureMatrix,
    labels: np.ndarray,
    config: ForestConfig,
    features_per_split: int,
) -> DecisionTreeModel:
    rng = np.random.default_rng(config.seed + tree_index)
    if config.bootstrap:
        chosen = rng.integers(0, len(labels), len(labels))
        sample = FeatureMatrix(
            rows=tuple(X.rows[int(i)] for i in chosen), n_columns=X.n_columns
        )
        sample_labels = labels[chosen]
    else:
        sample = X
        sample_labels = labels

    def select(n_features: int):
        return rng.choice(n_features, size=features_per_split, replace=False)

    tree_config = TreeConfig(
        max_depth=config.max_depth, min_samples_leaf=config.min_samples_leaf
    )
    return dt_fit(sample, sample_labels, tree_config, _select_features=select)


def rf_fit(
    X: FeatureMatrix, y, config: ForestConfig = ForestConfig(), workers: int = 1
) -> RandomForestModel:
    labels = np.asarray(y, dtype=np.int64)
    if len(labels) != len(X.rows):
        raise TrainingError(
            f"row/label count mismatch: {len(X.rows)} vs {len(labels)}"
        )
    features_per_split = _resolve_features_per_split(config, X.n_columns)

    def job(index: int) -> DecisionTreeModel:
        return _fit_one_tree(index, X, labels, config, features_per_split)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            trees = tuple(pool.map(job, range(config.n_trees)))
    else:
        trees = tuple(job(i) for i in range(config.n_trees))
    return RandomForestModel(trees=trees, n_features=X.n_columns, config=config)
