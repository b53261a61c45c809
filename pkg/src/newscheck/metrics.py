"""Evaluation harness: weighted F1, MCC, AUROC, stratified k-fold CV, and
corpus length statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DataError, NewsCheckError
from .labels import LABEL_PROPAGANDA
from .textprep import tokenize


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise ValueError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


def confusion(pairs: Sequence[tuple[str, str]], positive: str = LABEL_PROPAGANDA) -> ConfusionCounts:
    tp = fp = tn = fn = 0
    for gold, predicted in pairs:
        if gold == positive:
            if predicted == positive:
                tp += 1
            else:
                fn += 1
        else:
            if predicted == positive:
                fp += 1
            else:
                tn += 1
    return ConfusionCounts(tp=tp, fp=fp, tn=tn, fn=fn)


def _f1(tp: int, fp: int, fn: int) -> float:
    denom = 2 * tp + fp + fn
    return 2 * tp / denom if denom else 0.0


def weighted_f1(pairs: Sequence[tuple[str, str]]) -> float:
    """Support-weighted mean of the per-class F1 scores."""
    if not pairs:
        raise NewsCheckError("weighted_f1 needs at least one pair")
    counts = confusion(pairs)
    f1_pos = _f1(counts.tp, counts.fp, counts.fn)
    f1_neg = _f1(counts.tn, counts.fn, counts.fp)  # negative class as "positive"
    support_pos = counts.tp + counts.fn
    support_neg = counts.tn + counts.fp
    return (support_pos * f1_pos + support_neg * f1_neg) / counts.total


def mcc(counts: ConfusionCounts) -> float:
    """Matthews correlation coefficient, 0 when any marginal is zero."""
    if counts.total == 0:
        raise NewsCheckError("mcc needs at least one observation")
    tp, fp, tn, fn = counts.tp, counts.fp, counts.tn, counts.fn
    denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn)
    if denom == 0:
        return 0.0
    return (tp * tn - fp * fn) / math.sqrt(denom)


def auroc(scored: Sequence[tuple[str, float]], positive: str = LABEL_PROPAGANDA) -> float:
    """Rank-statistic AUROC; tied scores earn half credit."""
    if not scored:
        raise NewsCheckError("undefined AUROC: empty input")
    labels = np.asarray([1 if gold == positive else 0 for gold, _ in scored])
    scores = np.asarray([score for _, score in scored], dtype=float)
    n_pos = int(labels.sum())
    n_neg = len(labels) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise NewsCheckError("undefined AUROC: only one class present")
    order = np.argsort(scores, kind="stable")
    sorted_scores = scores[order]
    ranks = np.empty(len(scores))
    i = 0
    while i < len(sorted_scores):
        j = i
        while j + 1 < len(sorted_scores) and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0  # average rank, 1-based
        i = j + 1
    rank_sum = float(ranks[labels == 1].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


@dataclass(frozen=True)
class FoldMetrics:
    fold: int
    f1: float
    mcc: float
    auroc: float


@dataclass(frozen=True)
class CrossValidationReport:
    folds: tuple[FoldMetrics, ...]
    mean_f1: float
    mean_mcc: float
    mean_auroc: float
    best_fold: int  # index of the fold with the highest F1

    def as_dict(self) -> dict:
        return {
            "folds": [
                {"fold": f.fold, "f1": f.f1, "mcc": f.mcc, "auroc": f.auroc} for f in self.folds
            ],
            "mean": {"f1": self.mean_f1, "mcc": self.mean_mcc, "auroc": self.mean_auroc},
            "best_fold": self.best_fold,
        }

    def table(self) -> str:
        lines = ["fold  f1      mcc     auroc"]
        for f in self.folds:
            lines.append(f"{f.fold:<5d} {f.f1:<7.4f} {f.mcc:<7.4f} {f.auroc:<7.4f}")
        lines.append(f"mean  {self.mean_f1:<7.4f} {self.mean_mcc:<7.4f} {self.mean_auroc:<7.4f}")
        lines.append(f"best fold: {self.best_fold}")
        return "\n".join(lines)


def stratified_folds(labels: Sequence[str], folds: int, seed: int) -> list[np.ndarray]:
    """Deterministic stratified fold assignment: shuffle within each class,
    deal round-robin. Every fold gets both classes or the split fails."""
    if folds < 2:
        raise NewsCheckError("folds must be >= 2")
    if len(labels) < folds:
        raise DataError("too-small dataset: fewer points than folds")
    rng = np.random.default_rng(seed)
    assignment = np.empty(len(labels), dtype=int)
    for cls in sorted(set(labels)):
        idx = np.asarray([i for i, lab in enumerate(labels) if lab == cls])
        if len(idx) < folds:
            raise DataError(f"too-small dataset: class {cls!r} has {len(idx)} points for {folds} folds")
        rng.shuffle(idx)
        assignment[idx] = np.arange(len(idx)) % folds
    return [np.flatnonzero(assignment == k) for k in range(folds)]


def cross_validate(
    dataset: Sequence[tuple[object, str]],
    trainer: Callable[[list[tuple[object, str]]], Callable[[object], tuple[str, float]]],
    folds: int = 5,
    seed: int = 13,
) -> CrossValidationReport:
    """Seeded stratified k-fold evaluation.

    ``trainer`` receives the training pairs and returns a scoring function
    mapping one item to (predicted label, score); the score feeds AUROC, so
    any monotone confidence works. Folds are evaluated independently and
    reported in fold order with their mean and the best fold by F1.
    """
    labels = [label for _, label in dataset]
    if len(set(labels)) < 2:
        raise DataError("degenerate dataset: single class")
    fold_indices = stratified_folds(labels, folds, seed)
    per_fold = []
    for k, test_idx in enumerate(fold_indices):
        test_set = set(test_idx.tolist())
        train = [pair for i, pair in enumerate(dataset) if i not in test_set]
        score = trainer(train)
        pairs, scored = [], []
        for i in test_idx:
            item, gold = dataset[i]
            predicted, value = score(item)
            pairs.append((gold, predicted))
            scored.append((gold, value))
        per_fold.append(
            FoldMetrics(fold=k, f1=weighted_f1(pairs), mcc=mcc(confusion(pairs)), auroc=auroc(scored))
        )
    report = CrossValidationReport(
        folds=tuple(per_fold),
        mean_f1=sum(f.f1 for f in per_fold) / folds,
        mean_mcc=sum(f.mcc for f in per_fold) / folds,
        mean_auroc=sum(f.auroc for f in per_fold) / folds,
        best_fold=max(per_fold, key=lambda f: (f.f1, -f.fold)).fold,
    )
    return report


@dataclass(frozen=True)
class LengthStats:
    count: int
    mean: float
    min: float
    q1: float
    median: float
    q3: float
    max: float

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "mean": self.mean,
            "min": self.min,
            "q1": self.q1,
            "median": self.median,
            "q3": self.q3,
            "max": self.max,
        }


def length_stats(corpus: Sequence[str]) -> LengthStats:
    """Word-token length distribution of a corpus; quartiles use linear
    interpolation between order statistics so results are bit-reproducible."""
    if not corpus:
        raise NewsCheckError("empty corpus")
    lengths = np.asarray(
        [sum(1 for t in tokenize(text, "xx") if t.is_word) for text in corpus], dtype=float
    )
    q1, median, q3 = np.percentile(lengths, [25, 50, 75])
    return LengthStats(
        count=len(lengths),
        mean=float(lengths.mean()),
        min=float(lengths.min()),
        q1=float(q1),
        median=float(median),
        q3=float(q3),
        max=float(lengths.max()),
    )
