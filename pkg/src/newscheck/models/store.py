"""Model file serialization.

One JSON document per model, UTF-8, carrying ``format_version``, the model
kind, and the language scope. Linear models store their feature names inline
so a registry can validate them against the catalog they will be paired with.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..errors import DataError
from .kernel import KernelModel
from .linear import LinearModel
from .ngram import NgramScorer

FORMAT_VERSION = 1


def save_model(model: LinearModel | KernelModel | NgramScorer, path: str | Path) -> None:
    if isinstance(model, LinearModel):
        payload = {
            "kind": "linear",
            "language": model.language,
            "feature_names": list(model.feature_names),
            "weights": model.weights.tolist(),
            "bias": model.bias,
            "calibration": list(model.calibration),
        }
    elif isinstance(model, KernelModel):
        payload = {
            "kind": "kernel",
            "language": model.language,
            "support_vectors": model.support_vectors.tolist(),
            "dual_coefs": model.dual_coefs.tolist(),
            "gamma": model.gamma,
            "bias": model.bias,
        }
    elif isinstance(model, NgramScorer):
        payload = {
            "kind": "ngram",
            "language": model.language,
            "vocabulary": model.vocabulary,
            "weights": model.weights.tolist(),
            "bias": model.bias,
        }
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")
    payload["format_version"] = FORMAT_VERSION
    Path(path).write_text(json.dumps(payload, ensure_ascii=False) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> LinearModel | KernelModel | NgramScorer:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"{path}: cannot read model file: {exc}") from exc
    if raw.get("format_version") != FORMAT_VERSION:
        raise DataError(f"{path}: unsupported model format_version {raw.get('format_version')!r}")
    kind = raw.get("kind")
    try:
        if kind == "linear":
            return LinearModel(
                language=raw["language"],
                feature_names=tuple(raw["feature_names"]),
                weights=np.asarray(raw["weights"], dtype=float),
                bias=float(raw["bias"]),
                calibration=(float(raw["calibration"][0]), float(raw["calibration"][1])),
            )
        if kind == "kernel":
            return KernelModel(
                language=raw["language"],
                support_vectors=np.asarray(raw["support_vectors"], dtype=float),
                dual_coefs=np.asarray(raw["dual_coefs"], dtype=float),
                gamma=float(raw["gamma"]),
                bias=float(raw["bias"]),
            )
        if kind == "ngram":
            return NgramScorer(
                language=raw["language"],
                vocabulary={str(k): int(v) for k, v in raw["vocabulary"].items()},
                weights=np.asarray(raw["weights"], dtype=float),
                bias=float(raw["bias"]),
            )
    except (KeyError, ValueError, TypeError) as exc:
        raise DataError(f"{path}: malformed {kind} model: {exc}") from exc
    raise DataError(f"{path}: unknown model kind {kind!r}")
