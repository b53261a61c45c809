"""RBF-kernel SVM trained with simplified sequential minimal optimization.

Desk-scale trainer: the full kernel matrix is materialized (dataset capped at
5000 points) and pairs of dual variables are optimized until every training
point satisfies the KKT conditions within tolerance. Working-pair selection
is deterministic (largest |E_i - E_j| first, then an ordered fallback scan),
so retraining on the same data reproduces the same model.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DataError, NewsCheckError
from ..labels import label_sign, sign_label

DATASET_CAP = 5000

DEFAULT_KKT_TOL = 1e-3
_MIN_ALPHA_STEP = 1e-10
_SUPPORT_EPS = 1e-8


@dataclass(frozen=True)
class KernelModel:
    language: str
    support_vectors: np.ndarray  # shape (n_sv, dim)
    dual_coefs: np.ndarray  # alpha_i * y_i per support vector
    gamma: float
    bias: float

    def __post_init__(self):
        if len(self.support_vectors) != len(self.dual_coefs) or len(self.dual_coefs) < 1:
            raise ValueError("support vectors and dual coefficients must align and be non-empty")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")

    def decision(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.support_vectors.shape[1],):
            raise ValueError(
                f"dimension mismatch: model expects {self.support_vectors.shape[1]} features, got {x.shape}"
            )
        k = np.exp(-self.gamma * np.sum((self.support_vectors - x) ** 2, axis=1))
        return float(self.dual_coefs @ k + self.bias)


def rbf_kernel(X: np.ndarray, Z: np.ndarray, gamma: float) -> np.ndarray:
    """k(x, z) = exp(-gamma * ||x - z||^2), computed pairwise."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    Z = np.atleast_2d(np.asarray(Z, dtype=float))
    sq = np.sum(X**2, axis=1)[:, None] + np.sum(Z**2, axis=1)[None, :] - 2.0 * (X @ Z.T)
    return np.exp(-gamma * np.maximum(sq, 0.0))


def dual_objective(K: np.ndarray, y: np.ndarray, alphas: np.ndarray) -> float:
    """W(alpha) = sum(alpha) - 1/2 * sum_ij alpha_i alpha_j y_i y_j K_ij."""
    ay = alphas * y
    return float(alphas.sum() - 0.5 * (ay @ K @ ay))


def kkt_violations(K: np.ndarray, y: np.ndarray, alphas: np.ndarray, b: float, C: float) -> np.ndarray:
    """Per-point KKT residual: how far y_i*f(x_i) is on the wrong side of the
    margin condition its alpha_i implies (0 when satisfied)."""
    f = K @ (alphas * y) + b
    margins = y * f
    res = np.zeros(len(y))
    interior = (alphas > _SUPPORT_EPS) & (alphas < C - _SUPPORT_EPS)
    res[alphas <= _SUPPORT_EPS] = np.maximum(0.0, 1.0 - margins[alphas <= _SUPPORT_EPS])
    res[interior] = np.abs(margins[interior] - 1.0)
    res[alphas >= C - _SUPPORT_EPS] = np.maximum(0.0, margins[alphas >= C - _SUPPORT_EPS] - 1.0)
    return res


def train_kernel(
    dataset: list[tuple[np.ndarray, str]],
    cfg,
    C: float = 1.0,
    gamma: float | None = None,
    tol: float = DEFAULT_KKT_TOL,
    max_passes: int = 200,
    language: str = "multi",
) -> KernelModel:
    """C-SVM dual optimization by SMO with maximal-violating-pair selection.

    ``gamma`` defaults to 1/num_features. Each step analytically optimizes
    the most violating (i, j) pair and updates the dual gradient in O(n);
    training stops once the pairwise KKT gap falls within ``tol``. The step
    budget is ``max_passes`` sweeps' worth of pair steps (max_passes * n);
    exhausting it raises, reporting the last dual objective. Only vectors
    with alpha above 1e-8 are kept in the model. No randomness: retraining
    on the same data reproduces the same model.
    """
    if not dataset:
        raise DataError("degenerate dataset: empty")
    if len(dataset) > DATASET_CAP:
        raise DataError(f"dataset exceeds the desk-scale cap of {DATASET_CAP} points")
    labels = {label for _, label in dataset}
    if len(labels) < 2:
        raise DataError("degenerate dataset: single class")
    del cfg  # SMO has no epoch/learning-rate knobs; kept for trainer-interface symmetry
    X = np.asarray([np.asarray(x, dtype=float) for x, _ in dataset])
    y = np.asarray([label_sign(label) for _, label in dataset], dtype=float)
    n, dim = X.shape
    if gamma is None:
        gamma = 1.0 / dim
    K = rbf_kernel(X, X, gamma)
    Q = (y[:, None] * y[None, :]) * K

    alphas = np.zeros(n)
    gradient = -np.ones(n)  # of the minimization objective 1/2 a'Qa - sum(a)
    max_steps = max_passes * n

    for _ in range(max_steps):
        yg = -y * gradient  # equals y_t - f(x_t) with the bias term dropped
        up = ((y > 0) & (alphas < C - _SUPPORT_EPS)) | ((y < 0) & (alphas > _SUPPORT_EPS))
        low = ((y < 0) & (alphas < C - _SUPPORT_EPS)) | ((y > 0) & (alphas > _SUPPORT_EPS))
        if not up.any() or not low.any():
            break
        i = int(np.argmax(np.where(up, yg, -np.inf)))
        j = int(np.argmin(np.where(low, yg, np.inf)))
        gap = yg[i] - yg[j]
        if gap <= tol:
            break
        ai_old, aj_old = alphas[i], alphas[j]
        if y[i] == y[j]:
            lo, hi = max(0.0, ai_old + aj_old - C), min(C, ai_old + aj_old)
        else:
            lo, hi = max(0.0, aj_old - ai_old), min(C, C + aj_old - ai_old)
        curvature = K[i, i] + K[j, j] - 2.0 * K[i, j]
        curvature = max(curvature, 1e-12)
        # errors without bias: E_t = y_t * G_t; the bias cancels in E_i - E_j
        step = y[j] * ((y[i] * gradient[i]) - (y[j] * gradient[j])) / curvature
        aj = min(hi, max(lo, aj_old + step))
        if abs(aj - aj_old) < _MIN_ALPHA_STEP:
            break
        ai = ai_old + y[i] * y[j] * (aj_old - aj)
        alphas[i], alphas[j] = ai, aj
        gradient += Q[:, i] * (ai - ai_old) + Q[:, j] * (aj - aj_old)
    else:
        raise NewsCheckError(
            "kernel training did not converge within "
            f"{max_steps} pair steps; last dual objective {dual_objective(K, y, alphas):.6f}"
        )

    # bias: mean over margin support vectors, midpoint of the KKT gap otherwise
    yg = -y * gradient
    interior = (alphas > _SUPPORT_EPS) & (alphas < C - _SUPPORT_EPS)
    if interior.any():
        f_no_b = K @ (alphas * y)
        b = float(np.mean(y[interior] - f_no_b[interior]))
    else:
        up = ((y > 0) & (alphas < C - _SUPPORT_EPS)) | ((y < 0) & (alphas > _SUPPORT_EPS))
        low = ((y < 0) & (alphas < C - _SUPPORT_EPS)) | ((y > 0) & (alphas > _SUPPORT_EPS))
        hi = float(np.max(yg[up])) if up.any() else 0.0
        lo = float(np.min(yg[low])) if low.any() else 0.0
        b = 0.5 * (hi + lo)
    if float(kkt_violations(K, y, alphas, b, C).max()) > tol:
        raise NewsCheckError(
            "kernel training converged to a KKT-violating point; "
            f"last dual objective {dual_objective(K, y, alphas):.6f}"
        )

    keep = alphas > _SUPPORT_EPS
    if not keep.any():
        raise NewsCheckError("kernel training produced no support vectors")
    return KernelModel(
        language=language,
        support_vectors=X[keep],
        dual_coefs=alphas[keep] * y[keep],
        gamma=float(gamma),
        bias=float(b),
    )


def score_kernel(model: KernelModel, x: np.ndarray) -> tuple[str, float]:
    """Label by the sign of the decision value f(x); ties are NoPropaganda."""
    f = model.decision(x)
    return sign_label(f), f


def training_accuracy(model: KernelModel, dataset: list[tuple[np.ndarray, str]]) -> float:
    hits = sum(1 for x, label in dataset if score_kernel(model, x)[0] == label)
    return hits / len(dataset)
