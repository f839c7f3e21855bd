"""Multinomial Naive Bayes over raw term counts with additive smoothing."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DataError, TrainingError
from ..features import FeatureMatrix, SparseVector
from .base import check_binary_labels


@dataclass(frozen=True)
class NaiveBayesModel:
    """Log priors and per-class log term likelihoods.

    With ``alpha == 0`` an unseen (class, term) pair carries likelihood zero,
    stored as -inf in log space: any document containing such a term gets
    posterior 0 for that class, and a document zeroing out both classes falls
    back to the priors.
    """

    log_prior: np.ndarray
    log_likelihood: np.ndarray
    alpha: float

    @property
    def n_features(self) -> int:
        return self.log_likelihood.shape[1]

    def predict_score(self, x: SparseVector) -> float:
        """Normalized posterior probability of class 1."""
        joint = self.log_prior.copy()
        for j, value in x:
            if not 0 <= j < self.n_features:
                raise DataError(
                    f"feature index {j} out of range [0, {self.n_features})"
                )
            joint += value * self.log_likelihood[:, j]
        if np.all(np.isneginf(joint)):
            joint = self.log_prior.copy()
        peak = joint.max()
        weights = np.exp(joint - peak)
        return float(weights[1] / weights.sum())

    def to_dict(self) -> dict:
        return {
            "kind": "nb",
            "alpha": self.alpha,
            "log_prior": [repr(v) for v in self.log_prior.tolist()],
            "log_likelihood": [
                [repr(v) for v in row] for row in self.log_likelihood.tolist()
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "NaiveBayesModel":
        return cls(
            log_prior=np.array([float(v) for v in payload["log_prior"]]),
            log_likelihood=np.array(
                [[float(v) for v in row] for row in payload["log_likelihood"]]
            ),
            alpha=float(payload["alpha"]),
        )


def nb_fit(X: FeatureMatrix, y, alpha: float = 1.0) -> NaiveBayesModel:
    """Fit from raw count rows: likelihood(t|c) = (count(t,c)+a) / (total(c)+a*V)."""
    if alpha < 0:
        raise TrainingError(f"smoothing alpha must be >= 0, got {alpha}")
    labels = check_binary_labels(y)
    if len(labels) != len(X.rows):
        raise TrainingError(
            f"row/label count mismatch: {len(X.rows)} vs {len(labels)}"
        )
    n_features = X.n_columns
    term_counts = np.zeros((2, n_features))
    for row, label in zip(X.rows, labels):
        for j, value in row:
            term_counts[label, j] += value
    totals = term_counts.sum(axis=1, keepdims=True)
    with np.errstate(divide="ignore"):
        log_likelihood = np.log(term_counts + alpha) - np.log(
            totals + alpha * n_features
        )
    class_counts = np.bincount(labels, minlength=2)
    log_prior = np.log(class_counts / class_counts.sum())
    return NaiveBayesModel(
        log_prior=log_prior, log_likelihood=log_likelihood, alpha=alpha
    )
