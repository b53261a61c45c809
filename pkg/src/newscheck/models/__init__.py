"""Classifier training and scoring.

Three model families:

* a linear SVM trained with Pegasos-style hinge-loss SGD, whose coefficients
  drive the stance-indicator explanations,
* an RBF-kernel SVM trained with simplified SMO, which casts the second
  vote in the arbitration rule,
* a character-n-gram logistic scorer, the pluggable whole-document
  probability model.
"""

from .kernel import KernelModel, dual_objective, kkt_violations, rbf_kernel, score_kernel, train_kernel
from .linear import (
    LinearModel,
    TrainConfig,
    coefficient_report,
    hinge_objective,
    hinge_subgradient,
    score_linear,
    train_linear,
)
from .ngram import NgramScorer, score_document, train_ngram_scorer
from .store import load_model, save_model

__all__ = [
    "KernelModel",
    "LinearModel",
    "NgramScorer",
    "TrainConfig",
    "coefficient_report",
    "dual_objective",
    "hinge_objective",
    "hinge_subgradient",
    "kkt_violations",
    "load_model",
    "rbf_kernel",
    "save_model",
    "score_document",
    "score_kernel",
    "score_linear",
    "train_kernel",
    "train_linear",
    "train_ngram_scorer",
]
