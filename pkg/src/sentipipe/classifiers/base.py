"""Shared helpers for the four classifier implementations."""

from __future__ import annotations

import numpy as np

from ..errors import DataError, TrainingError
from ..features import FeatureMatrix, SparseVector


def as_dense_row(x: SparseVector, n_features: int) -> np.ndarray:
    """Expand one sparse vector, rejecting indices outside the model's space."""
    row = np.zeros(n_features)
    for j, value in x:
        if not 0 <= j < n_features:
            raise DataError(f"feature index {j} out of range [0, {n_features})")
        row[j] = value
    return row


def as_dense_matrix(X: FeatureMatrix) -> np.ndarray:
    return X.to_dense()


def check_binary_labels(y) -> np.ndarray:
    """Validate a 0/1 label vector with both classes present."""
    labels = np.asarray(y, dtype=np.int64)
    if labels.ndim != 1 or labels.size == 0:
        raise TrainingError("labels must be a non-empty 1-D sequence")
    values = set(labels.tolist())
    if not values <= {0, 1}:
        raise TrainingError(f"labels must be 0 or 1, got {sorted(values)}")
    if len(values) < 2:
        raise TrainingError("training data contains a single class")
    return labels
