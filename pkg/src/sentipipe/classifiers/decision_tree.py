"""Binary CART-style decision tree minimizing weighted Gini impurity.

Candidate thresholds are midpoints between consecutive distinct sorted values
of each candidate feature. The split search minimizes the weighted child Gini
with a fully deterministic tie rule: lowest feature index first, then lowest
threshold. Near-ties are resolved in exact integer arithmetic (minimizing
weighted Gini is equivalent to maximizing sum-of-squared class counts over
child size, a rational in the counts), so the chosen split never depends on
floating-point rounding.

Impure nodes are split as long as any candidate threshold exists, even at
zero impurity gain - interaction-only patterns (e.g. XOR) need such splits
before any gain appears. Recursion stops on pure nodes, exhausted depth,
the min_samples_leaf floor, or constant features.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import TrainingError
from ..features import FeatureMatrix, SparseVector
from .base import as_dense_row


@dataclass(frozen=True)
class TreeConfig:
    max_depth: int | None = None
    min_samples_leaf: int = 1

    def __post_init__(self):
        if self.max_depth is not None and self.max_depth < 0:
            raise TrainingError(f"max_depth must be >= 0, got {self.max_depth}")
        if self.min_samples_leaf < 1:
            raise TrainingError(
                f"min_samples_leaf must be >= 1, got {self.min_samples_leaf}"
            )


@dataclass(frozen=True)
class TreeLeaf:
    n_pos: int
    n_neg: int

    @property
    def score(self) -> float:
        return self.n_pos / (self.n_pos + self.n_neg)


@dataclass(frozen=True)
class TreeSplit:
    feature: int
    threshold: float
    left: "TreeNode"
    right: "TreeNode"


TreeNode = TreeLeaf | TreeSplit

# Candidate split: exact comparison key (A, B, n_l, n_r) where A and B are the
# sums of squared class counts of the left/right children. The split score to
# maximize is A/n_l + B/n_r.
_SplitKey = tuple[int, int, int, int]


def _key_greater(a: _SplitKey, b: _SplitKey) -> bool:
    """Exact comparison of A1/nl1 + B1/nr1 > A2/nl2 + B2/nr2 in integers."""
    lhs = (a[0] * a[3] + a[1] * a[2]) * (b[2] * b[3])
    rhs = (b[0] * b[3] + b[1] * b[2]) * (a[2] * a[3])
    return lhs > rhs


def _best_split_for_feature(
    column: np.ndarray, labels: np.ndarray, min_leaf: int
) -> tuple[_SplitKey, float] | None:
    """Best (key, threshold) along one feature, lowest threshold on exact ties."""
    n = len(column)
    order = np.argsort(column, kind="stable")
    values = column[order]
    ordered_labels = labels[order]
    cum_pos = np.cumsum(ordered_labels)
    total_pos = int(cum_pos[-1])

    positions = np.nonzero(values[:-1] != values[1:])[0] + 1
    positions = positions[(positions >= min_leaf) & (positions <= n - min_leaf)]
    if len(positions) == 0:
        return None

    left_pos = cum_pos[positions - 1]
    left_neg = positions - left_pos
    right_pos = total_pos - left_pos
    right_neg = (n - positions) - right_pos
    score = (left_pos**2 + left_neg**2) / positions + (
        right_pos**2 + right_neg**2
    ) / (n - positions)

    # Float pre-screen, then exact integer comparison among near-best candidates.
    near_best = np.nonzero(score >= score.max() - 1e-6)[0]
    best_key = None
    best_position = None
    for idx in near_best:
        i = int(positions[idx])
        key = (
            int(left_pos[idx]) ** 2 + int(left_neg[idx]) ** 2,
            int(right_pos[idx]) ** 2 + int(right_neg[idx]) ** 2,
            i,
            n - i,
        )
        if best_key is None or _key_greater(key, best_key):
            best_key = key
            best_position = i
    low = float(values[best_position - 1])
    high = float(values[best_position])
    threshold = (low + high) / 2.0
    if not low <= threshold < high:
        threshold = low
    return best_key, threshold


FeatureSelector = Callable[[int], Sequence[int]]


def _build_tree(
    X: np.ndarray,
    y: np.ndarray,
    config: TreeConfig,
    depth: int,
    select_features: FeatureSelector | None,
) -> TreeNode:
    n = len(y)
    n_pos = int(y.sum())
    n_neg = n - n_pos
    if (
        n_pos == 0
        or n_neg == 0
        or (config.max_depth is not None and depth >= config.max_depth)
        or n < 2 * config.min_samples_leaf
    ):
        return TreeLeaf(n_pos=n_pos, n_neg=n_neg)

    n_features = X.shape[1]
    if select_features is None:
        candidates = range(n_features)
    else:
        candidates = sorted(int(f) for f in select_features(n_features))

    best_key = None
    best_feature = None
    best_threshold = None
    for feature in candidates:
        found = _best_split_for_feature(X[:, feature], y, config.min_samples_leaf)
        if found is None:
            continue
        key, threshold = found
        if best_key is None or _key_greater(key, best_key):
            best_key = key
            best_feature = feature
            best_threshold = threshold
    if best_key is None:
        return TreeLeaf(n_pos=n_pos, n_neg=n_neg)

    mask = X[:, best_feature] <= best_threshold
    left = _build_tree(X[mask], y[mask], config, depth + 1, select_features)
    right = _build_tree(X[~mask], y[~mask], config, depth + 1, select_features)
    return TreeSplit(
        feature=best_feature, threshold=best_threshold, left=left, right=right
    )


@dataclass(frozen=True)
class DecisionTreeModel:
    root: TreeNode
    n_features: int
    config: TreeConfig

    def predict_score(self, x: SparseVector) -> float:
        return self.score_dense_row(as_dense_row(x, self.n_features))

    def score_dense_row(self, row: np.ndarray) -> float:
        node = self.root
        while isinstance(node, TreeSplit):
            node = node.left if row[node.feature] <= node.threshold else node.right
        return node.score

    def to_dict(self) -> dict:
        return {
            "kind": "dt",
            "n_features": self.n_features,
            "max_depth": self.config.max_depth,
            "min_samples_leaf": self.config.min_samples_leaf,
            "root": _node_to_dict(self.root),
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "DecisionTreeModel":
        return cls(
            root=_node_from_dict(payload["root"]),
            n_features=int(payload["n_features"]),
            config=TreeConfig(
                max_depth=payload["max_depth"],
                min_samples_leaf=int(payload["min_samples_leaf"]),
            ),
        )


def _node_to_dict(node: TreeNode) -> dict:
    if isinstance(node, TreeLeaf):
        return {"pos": node.n_pos, "neg": node.n_neg}
    return {
        "feature": node.feature,
        "threshold": repr(node.threshold),
        "left": _node_to_dict(node.left),
        "right": _node_to_dict(node.right),
    }


def _node_from_dict(payload: dict) -> TreeNode:
    if "pos" in payload:
        return TreeLeaf(n_pos=int(payload["pos"]), n_neg=int(payload["neg"]))
    return TreeSplit(
        feature=int(payload["feature"]),
        threshold=float(payload["threshold"]),
        left=_node_from_dict(payload["left"]),
        right=_node_from_dict(payload["right"]),
    )


def gini_impurity(counts: tuple[int, int]) -> float:
    """1 - p1^2 - p0^2 for a pair of non-negative class counts."""
    pos, neg = counts
    if pos < 0 or neg < 0:
        raise TrainingError("class counts must be non-negative")
    total = pos + neg
    if total == 0:
        raise TrainingError("Gini impurity is undefined for zero samples")
    p_pos = pos / total
    p_neg = neg / total
    return 1.0 - p_pos * p_pos - p_neg * p_neg


def _check_tree_labels(y) -> np.ndarray:
    labels = np.asarray(y, dtype=np.int64)
    if labels.ndim != 1 or labels.size == 0:
        raise TrainingError("labels must be a non-empty 1-D sequence")
    if not set(labels.tolist()) <= {0, 1}:
        raise TrainingError("labels must be 0 or 1")
    return labels


def dt_fit(
    X: FeatureMatrix,
    y,
    config: TreeConfig = TreeConfig(),
    _select_features: FeatureSelector | None = None,
) -> DecisionTreeModel:
    """Grow a tree by exhaustive split search over the given feature matrix.

    A single-class ``y`` produces a single pure leaf rather than an error.
    """
    labels = _check_tree_labels(y)
    if len(labels) != len(X.rows):
        raise TrainingError(
            f"row/label count mismatch: {len(X.rows)} vs {len(labels)}"
        )
    dense = X.to_dense()
    root = _build_tree(dense, labels, config, depth=0, select_features=_select_features)
    return DecisionTreeModel(root=root, n_features=X.n_columns, config=config)
