import numpy as np
import pytest

from newscheck.errors import DataError
from newscheck.labels import LABEL_NONE, LABEL_PROPAGANDA, label_sign
from newscheck.models import (
    KernelModel,
    TrainConfig,
    dual_objective,
    kkt_violations,
    rbf_kernel,
    score_kernel,
    score_linear,
    train_kernel,
    train_linear,
)
from oracles import grid_search_dual

XOR = [
    (np.array([0.0, 0.0]), LABEL_PROPAGANDA),
    (np.array([1.0, 1.0]), LABEL_PROPAGANDA),
    (np.array([0.0, 1.0]), LABEL_NONE),
    (np.array([1.0, 0.0]), LABEL_NONE),
]


def test_xor_accuracy_and_dual_objective():
    C, gamma = 10.0, 1.0
    model = train_kernel(XOR, TrainConfig(), C=C, gamma=gamma)
    assert all(score_kernel(model, x)[0] == label for x, label in XOR)

    X = np.array([x for x, _ in XOR])
    y = np.array([label_sign(label) for _, label in XOR], dtype=float)
    K = rbf_kernel(X, X, gamma)
    # all four points are support vectors here; recover alpha = |dual coef|
    assert len(model.dual_coefs) == 4
    alphas = np.abs(model.dual_coefs)
    _, oracle_best = grid_search_dual(K, y, C)
    assert dual_objective(K, y, alphas) == pytest.approx(oracle_best, abs=1e-2)
    assert kkt_violations(K, y, alphas, model.bias, C).max() <= 1e-3


def test_kernel_at_least_matches_linear_on_separable_data():
    rng = np.random.default_rng(3)
    rows = []
    for i in range(30):
        if i % 2 == 0:
            rows.append((np.array([1.0, 0.0]) + 0.1 * rng.standard_normal(2), LABEL_PROPAGANDA))
        else:
            rows.append((np.array([0.0, 1.0]) + 0.1 * rng.standard_normal(2), LABEL_NONE))
    linear = train_linear(rows, TrainConfig(seed=13))
    kernel = train_kernel(rows, TrainConfig(), C=10.0)
    acc_linear = sum(score_linear(linear, x)[0] == lab for x, lab in rows) / len(rows)
    acc_kernel = sum(score_kernel(kernel, x)[0] == lab for x, lab in rows) / len(rows)
    assert acc_kernel >= acc_linear


def test_single_class_rejected():
    rows = [(np.array([0.0, 1.0]), LABEL_NONE), (np.array([1.0, 0.0]), LABEL_NONE)]
    with pytest.raises(DataError, match="degenerate dataset"):
        train_kernel(rows, TrainConfig())


def test_dataset_cap():
    rows = [(np.array([float(i), 0.0]), LABEL_PROPAGANDA) for i in range(5001)]
    with pytest.raises(DataError, match="desk-scale cap"):
        train_kernel(rows, TrainConfig())


def single_sv_model(bias=0.0, gamma=1.0):
    return KernelModel(
        language="en",
        support_vectors=np.array([[1.0, 2.0]]),
        dual_coefs=np.array([1.0]),
        gamma=gamma,
        bias=bias,
    )


def test_score_at_support_vector():
    label, value = score_kernel(single_sv_model(), np.array([1.0, 2.0]))
    assert value == pytest.approx(1.0)  # k(x, x) = 1
    assert label == LABEL_PROPAGANDA


def test_score_with_negative_bias():
    label, value = score_kernel(single_sv_model(bias=-2.0), np.array([1.0, 2.0]))
    assert value == pytest.approx(-1.0)
    assert label == LABEL_NONE


def test_kernel_decay_far_from_support():
    label, value = score_kernel(single_sv_model(bias=0.1, gamma=50.0), np.array([9.0, -7.0]))
    assert value == pytest.approx(0.1, abs=1e-9)
    assert label == LABEL_PROPAGANDA


def test_rbf_kernel_properties():
    rng = np.random.default_rng(0)
    X = rng.standard_normal((8, 3))
    K = rbf_kernel(X, X, gamma=0.7)
    assert np.allclose(np.diag(K), 1.0)
    assert (K > 0).all() and (K <= 1.0).all()
    assert np.allclose(K, K.T)


def test_kkt_satisfied_on_random_separable_set():
    rng = np.random.default_rng(11)
    rows = []
    for i in range(24):
        center = np.array([1.0, 1.0]) if i % 2 == 0 else np.array([-1.0, -1.0])
        rows.append((center + 0.2 * rng.standard_normal(2), LABEL_PROPAGANDA if i % 2 == 0 else LABEL_NONE))
    model = train_kernel(rows, TrainConfig(), C=5.0, gamma=0.5)
    X = np.array([x for x, _ in rows])
    y = np.array([label_sign(lab) for _, lab in rows], dtype=float)
    K = rbf_kernel(X, X, 0.5)
    # rebuild the full alpha vector: zero for non-SVs
    alphas = np.zeros(len(rows))
    for sv, coef in zip(model.support_vectors, model.dual_coefs):
        idx = int(np.argmin(np.sum((X - sv) ** 2, axis=1)))
        alphas[idx] = abs(coef)
    assert kkt_violations(K, y, alphas, model.bias, 5.0).max() <= 1e-3


def test_training_deterministic():
    a = train_kernel(XOR, TrainConfig(), C=10.0, gamma=1.0)
    b = train_kernel(XOR, TrainConfig(), C=10.0, gamma=1.0)
    assert np.array_equal(a.dual_coefs, b.dual_coefs)
    assert a.bias == b.bias


def test_score_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        score_kernel(single_sv_model(), np.array([1.0, 2.0, 3.0]))
