"""Linear SVM: Pegasos-style hinge-loss SGD plus Platt probability calibration.

The linear model exists for its coefficients: positive weights mark features
associated with the pro-Kremlin class, negative ones with the pro-Western
side. Scoring maps the decision value through a fitted sigmoid so the model
also reports a probability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DataError
from ..labels import STANCE_PRO_KREMLIN, STANCE_PRO_WESTERN, label_sign, sign_label


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 40
    learning_rate: float = 0.5
    regularization: float = 1e-3
    seed: int = 13
    folds: int = 5

    def __post_init__(self):
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.regularization < 0:
            raise ValueError("regularization must be >= 0")
        if self.folds < 2:
            raise ValueError("folds must be >= 2")


@dataclass(frozen=True)
class LinearModel:
    language: str
    feature_names: tuple[str, ...]
    weights: np.ndarray
    bias: float
    calibration: tuple[float, float] = (-1.0, 0.0)  # (A, B); prob = 1/(1+exp(A*s+B))

    def __post_init__(self):
        if len(self.weights) != len(self.feature_names):
            raise ValueError("weights and feature_names must have the same length")
        if not np.all(np.isfinite(self.weights)) or not math.isfinite(self.bias):
            raise ValueError("model parameters must be finite")

    def decision(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        if x.shape != self.weights.shape:
            raise ValueError(f"dimension mismatch: model has {len(self.weights)} features, input has {x.shape}")
        return float(self.weights @ x + self.bias)


def hinge_objective(w: np.ndarray, b: float, x: np.ndarray, y: int, lam: float) -> float:
    """Single-point regularized hinge loss, the quantity each SGD step descends."""
    return 0.5 * lam * float(w @ w) + max(0.0, 1.0 - y * (float(w @ x) + b))


def hinge_subgradient(w: np.ndarray, b: float, x: np.ndarray, y: int, lam: float) -> tuple[np.ndarray, float]:
    """Subgradient of :func:`hinge_objective` wrt (w, b); at the kink this
    returns the margin-violated branch."""
    if y * (float(w @ x) + b) < 1.0:
        return lam * w - y * x, float(-y)
    return lam * w, 0.0


def train_linear(dataset: list[tuple[np.ndarray, str]], cfg: TrainConfig, language: str = "multi",
                 feature_names: list[str] | None = None) -> LinearModel:
    """Train by seeded Pegasos SGD, then fit the (A, B) probability calibration.

    With regularization λ > 0 the step size follows the 1/(λt) schedule; at
    λ = 0 it falls back to the configured constant learning rate. Same seed,
    same data → bit-identical weights.
    """
    if not dataset:
        raise DataError("degenerate dataset: empty")
    labels = {label for _, label in dataset}
    if len(labels) < 2:
        raise DataError("degenerate dataset: single class")
    X = np.asarray([np.asarray(x, dtype=float) for x, _ in dataset])
    y = np.asarray([label_sign(label) for _, label in dataset])
    n, dim = X.shape
    if feature_names is None:
        feature_names = [f"f{i}" for i in range(dim)]
    if len(feature_names) != dim:
        raise ValueError("feature_names length does not match vector dimension")

    rng = np.random.default_rng(cfg.seed)
    lam = cfg.regularization
    w = np.zeros(dim)
    b = 0.0
    t = 0
    for _ in range(cfg.epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t) if lam > 0 else cfg.learning_rate
            if y[i] * (w @ X[i] + b) < 1.0:
                w *= 1.0 - eta * lam
                w += eta * y[i] * X[i]
                b += eta * y[i]
            else:
                w *= 1.0 - eta * lam
    scores = X @ w + b
    calibration = fit_calibration(scores, y)
    return LinearModel(
        language=language,
        feature_names=tuple(feature_names),
        weights=w,
        bias=float(b),
        calibration=calibration,
    )


def fit_calibration(scores: np.ndarray, y: np.ndarray, iterations: int = 300, lr: float = 0.5) -> tuple[float, float]:
    """Platt-style sigmoid fit of P(propaganda | score) = 1/(1+exp(A*s+B)).

    Targets are smoothed (n+1)/(n+2)-style so separable data cannot push A to
    infinity; plain gradient descent is enough at desk scale and keeps the
    fit deterministic.
    """
    scores = np.asarray(scores, dtype=float)
    pos = y > 0
    n_pos, n_neg = int(pos.sum()), int((~pos).sum())
    target = np.where(pos, (n_pos + 1.0) / (n_pos + 2.0), 1.0 / (n_neg + 2.0))
    a, b = -1.0, 0.0
    scale = max(1.0, float(np.abs(scores).max())) if len(scores) else 1.0
    s = scores / scale
    for _ in range(iterations):
        p = 1.0 / (1.0 + np.exp(a * scale * s + b))
        # d(nll)/du for u = A*s+B is (target - p); descend along it
        err = target - p
        a -= lr * float(err @ s) / len(s)
        b -= lr * float(err.mean())
    return float(a), float(b)


def score_linear(model: LinearModel, x: np.ndarray) -> tuple[str, float]:
    """Label by the sign of w·x + b (ties are NoPropaganda) and report the
    calibrated propaganda probability."""
    s = model.decision(x)
    a, b = model.calibration
    prob = 1.0 / (1.0 + math.exp(a * s + b))
    return sign_label(s), prob


def coefficient_report(model: LinearModel, top_k: int) -> list[tuple[str, float, str]]:
    """The top-|weight| features with their stance, zero weights omitted."""
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    ranked = sorted(
        (
            (name, float(weight))
            for name, weight in zip(model.feature_names, model.weights)
            if weight != 0.0
        ),
        key=lambda pair: (-abs(pair[1]), pair[0]),
    )
    return [
        (name, weight, STANCE_PRO_KREMLIN if weight > 0 else STANCE_PRO_WESTERN)
        for name, weight in ranked[:top_k]
    ]
