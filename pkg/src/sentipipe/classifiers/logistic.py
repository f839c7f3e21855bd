"""Binary logistic regression trained by full-batch gradient descent.

The objective is mean cross-entropy plus an L2 penalty on the weights (the
bias is unregularized). Loss is computed with the log-sum-exp form, so it
stays finite for any finite logits. Training starts from zero weights, making
a zero-epoch fit score 0.5 everywhere; a loss exceeding ten times the initial
loss aborts with the offending epoch (the divergence guard for oversized
learning rates).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DataError, TrainingError
from ..features import FeatureMatrix, SparseVector
from .base import check_binary_labels


@dataclass(frozen=True)
class LogisticConfig:
    learning_rate: float = 0.1
    epochs: int = 500
    l2: float = 1e-4
    seed: int = 0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise TrainingError(f"learning_rate must be > 0, got {self.learning_rate}")
        if self.epochs < 0:
            raise TrainingError(f"epochs must be >= 0, got {self.epochs}")
        if self.l2 < 0:
            raise TrainingError(f"l2 must be >= 0, got {self.l2}")


def sigmoid(z: np.ndarray) -> np.ndarray:
    """Numerically stable logistic function."""
    return np.exp(z - np.logaddexp(0.0, z))


def loss_and_gradient(
    weights: np.ndarray, bias: float, X: np.ndarray, y: np.ndarray, l2: float
) -> tuple[float, np.ndarray, float]:
    """Mean cross-entropy + (l2/2)*||w||^2 and its analytic gradient."""
    n = len(y)
    z = X @ weights + bias
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z) + 0.5 * l2 * weights @ weights)
    residual = sigmoid(z) - y
    grad_w = X.T @ residual / n + l2 * weights
    grad_b = float(residual.mean())
    return loss, grad_w, grad_b


@dataclass(frozen=True)
class LogisticModel:
    weights: np.ndarray
    bias: float
    config: LogisticConfig
    loss_history: tuple[float, ...] = ()

    @property
    def n_features(self) -> int:
        return len(self.weights)

    def predict_score(self, x: SparseVector) -> float:
        z = self.bias
        for j, value in x:
            if not 0 <= j < self.n_features:
                raise DataError(
                    f"feature index {j} out of range [0, {self.n_features})"
                )
            z += self.weights[j] * value
        return float(sigmoid(np.float64(z)))

    def to_dict(self) -> dict:
        return {
            "kind": "lr",
            "bias": repr(self.bias),
            "weights": [repr(w) for w in self.weights.tolist()],
            "learning_rate": self.config.learning_rate,
            "epochs": self.config.epochs,
            "l2": self.config.l2,
            "seed": self.config.seed,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "LogisticModel":
        return cls(
            weights=np.array([float(w) for w in payload["weights"]]),
            bias=float(payload["bias"]),
            config=LogisticConfig(
                learning_rate=float(payload["learning_rate"]),
                epochs=int(payload["epochs"]),
                l2=float(payload["l2"]),
                seed=int(payload["seed"]),
            ),
        )


def lr_fit(X: FeatureMatrix, y, config: LogisticConfig = LogisticConfig()) -> LogisticModel:
    """Full-batch gradient descent from zero weights."""
    labels = check_binary_labels(y).astype(np.float64)
    if len(labels) != len(X.rows):
        raise TrainingError(
            f"row/label count mismatch: {len(X.rows)} vs {len(labels)}"
        )
    dense = X.to_dense()
    if not np.all(np.isfinite(dense)):
        raise TrainingError("feature matrix contains non-finite values")
    weights = np.zeros(X.n_columns)
    bias = 0.0
    history = []
    initial_loss = None
    for epoch in range(config.epochs):
        loss, grad_w, grad_b = loss_and_gradient(weights, bias, dense, labels, config.l2)
        if not np.isfinite(loss):
            raise TrainingError(f"non-finite loss at epoch {epoch}")
        if initial_loss is None:
            initial_loss = loss
        elif loss > 10.0 * initial_loss:
            raise TrainingError(
                f"training diverged at epoch {epoch}: "
                f"loss {loss:.6g} > 10 * initial {initial_loss:.6g}"
            )
        history.append(loss)
        weights = weights - config.learning_rate * grad_w
        bias = bias - config.learning_rate * grad_b
    return LogisticModel(
        weights=weights, bias=bias, config=config, loss_history=tuple(history)
    )
