"""Character-n-gram logistic document scorer.

The pluggable whole-text probability model: logistic regression over
character 3–5-gram counts of the lowercased, whitespace-collapsed text.
Anything exposing ``score_document``'s (label, probability) contract can
stand in for it in the pipeline.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..errors import DataError, NewsCheckError
from ..labels import LABEL_NONE, LABEL_PROPAGANDA
from ..langid import normalize

NGRAM_RANGE = (3, 5)
MAX_VOCABULARY = 100_000


@dataclass(frozen=True)
class NgramScorer:
    language: str  # a single tag, or "multi"
    vocabulary: dict[str, int]
    weights: np.ndarray
    bias: float

    def __post_init__(self):
        if not self.vocabulary:
            raise ValueError("vocabulary must be non-empty")
        if len(self.weights) != len(self.vocabulary):
            raise ValueError("weights must align with the vocabulary")

    def score(self, text: str) -> tuple[str, float]:
        """The pluggable document-scorer interface: any object with a
        ``score(text) -> (label, prob_propaganda)`` method can replace this
        model in the pipeline."""
        return score_document(self, text)


def char_ngrams(text: str, lo: int = NGRAM_RANGE[0], hi: int = NGRAM_RANGE[1]) -> Counter[str]:
    normalized = normalize(text)
    grams: Counter[str] = Counter()
    for n in range(lo, hi + 1):
        for i in range(len(normalized) - n + 1):
            grams[normalized[i : i + n]] += 1
    return grams


def _vector(grams: Counter[str], vocabulary: dict[str, int]) -> tuple[np.ndarray, np.ndarray]:
    """Known-gram indices with sublinear (1 + log) counts, L2-normalized.

    Sublinear scaling keeps high-frequency grams from drowning out rare
    discriminative ones; unseen grams are dropped.
    """
    idx, val = [], []
    for gram, count in grams.items():
        j = vocabulary.get(gram)
        if j is not None:
            idx.append(j)
            val.append(1.0 + math.log(count))
    if not idx:
        return np.empty(0, dtype=int), np.empty(0)
    values = np.asarray(val)
    return np.asarray(idx, dtype=int), values / np.linalg.norm(values)


def train_ngram_scorer(corpus: list[tuple[str, str]], cfg, language: str = "multi") -> NgramScorer:
    """Train the logistic layer by seeded SGD over per-document n-gram vectors.

    The vocabulary keeps the most frequent grams (frequency, then
    lexicographic, capped at 100k) so training is reproducible for a fixed
    corpus and seed. L2 regularization uses the lazily-applied scaling trick
    to stay O(nnz) per step.
    """
    if not corpus:
        raise DataError("degenerate corpus: empty")
    labels = {label for _, label in corpus}
    if len(labels) < 2:
        raise DataError("degenerate corpus: single class")
    doc_grams = [char_ngrams(text) for text, _ in corpus]
    totals: Counter[str] = Counter()
    for grams in doc_grams:
        totals.update(grams)
    if not totals:
        raise DataError("degenerate corpus: no character n-grams")
    kept = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))[:MAX_VOCABULARY]
    vocabulary = {gram: j for j, (gram, _) in enumerate(kept)}

    docs = [_vector(grams, vocabulary) for grams in doc_grams]
    targets = np.asarray([1.0 if label == LABEL_PROPAGANDA else 0.0 for _, label in corpus])

    rng = np.random.default_rng(cfg.seed)
    lam = cfg.regularization
    lr = cfg.learning_rate
    w = np.zeros(len(vocabulary))
    scale = 1.0
    b = 0.0
    for _ in range(cfg.epochs):
        for i in rng.permutation(len(docs)):
            idx, val = docs[i]
            s = scale * float(w[idx] @ val) + b if len(idx) else b
            p = 1.0 / (1.0 + math.exp(-s))
            err = p - targets[i]
            if lam > 0:
                scale *= 1.0 - lr * lam
                if scale < 1e-9:
                    w *= scale
                    scale = 1.0
            if len(idx):
                w[idx] -= lr * err * val / scale
            b -= lr * err
    w *= scale
    return NgramScorer(language=language, vocabulary=vocabulary, weights=w, bias=float(b))


def score_document(scorer: NgramScorer, text: str) -> tuple[str, float]:
    """Propaganda probability for one text; the label is Propaganda iff the
    probability exceeds 0.5 (exactly 0.5 stays NoPropaganda)."""
    if not normalize(text):
        raise NewsCheckError("empty input")
    idx, val = _vector(char_ngrams(text), scorer.vocabulary)
    s = float(scorer.weights[idx] @ val) + scorer.bias if len(idx) else scorer.bias
    prob = 1.0 / (1.0 + math.exp(-s))
    return (LABEL_PROPAGANDA if prob > 0.5 else LABEL_NONE), prob
