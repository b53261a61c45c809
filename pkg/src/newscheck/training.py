"""Glue between corpora and the model trainers.

Turns corpus records into model inputs, provides the trainer callables the
cross-validation harness consumes, and builds complete registry directories
(profiles, catalogs, glossaries, trained models) from synthetic corpora.
"""

from __future__ import annotations

import shutil
from pathlib import Path
from typing import Callable

import numpy as np

from .corpus import CorpusRecord
from .errors import DataError
from .features import (
    FeatureCatalog,
    Glossary,
    extract_features,
    load_catalog,
    load_glossary,
    model_input,
    model_input_names,
)
from .models import (
    TrainConfig,
    save_model,
    score_document,
    score_kernel,
    score_linear,
    train_kernel,
    train_linear,
    train_ngram_scorer,
)
from .registry import packaged_data_root
from .synthesis import synth_corpus
from .textprep import make_document

MODEL_KINDS = ("linear", "kernel", "ngram")


def featurize(records: list[CorpusRecord], catalog: FeatureCatalog, glossary: Glossary) -> list[tuple[np.ndarray, str]]:
    """Whole-document feature vectors in canonical model-input order."""
    names = model_input_names(catalog, glossary)
    rows = []
    for record in records:
        doc = make_document(record.text, catalog.language)
        vector = extract_features(doc, catalog, glossary)
        rows.append((model_input(vector, names), record.label))
    return rows


def ngram_trainer(cfg: TrainConfig, language: str = "multi") -> Callable:
    """Trainer over (text, label) pairs for the CV harness; scores are the
    propaganda probabilities."""

    def train(pairs: list[tuple[str, str]]):
        scorer = train_ngram_scorer(pairs, cfg, language=language)

        def score(text: str) -> tuple[str, float]:
            return score_document(scorer, text)

        return score

    return train


def kernel_trainer(cfg: TrainConfig, C: float = 1.0, gamma: float | None = None) -> Callable:
    """Trainer over (vector, label) pairs; scores are decision values."""

    def train(pairs: list[tuple[np.ndarray, str]]):
        model = train_kernel(pairs, cfg, C=C, gamma=gamma)

        def score(x: np.ndarray) -> tuple[str, float]:
            return score_kernel(model, x)

        return score

    return train


def linear_trainer(cfg: TrainConfig) -> Callable:
    def train(pairs: list[tuple[np.ndarray, str]]):
        model = train_linear(pairs, cfg)

        def score(x: np.ndarray) -> tuple[str, float]:
            return score_linear(model, x)

        return score

    return train


def train_language_models(records: list[CorpusRecord], language: str, cfg: TrainConfig,
                          catalog: FeatureCatalog, glossary: Glossary) -> dict[str, object]:
    """Train the full per-language trio from one corpus."""
    texts = [(r.text, r.label) for r in records]
    rows = featurize(records, catalog, glossary)
    names = model_input_names(catalog, glossary)
    return {
        "ngram": train_ngram_scorer(texts, cfg, language=language),
        "kernel": train_kernel(rows, cfg, language=language),
        "linear": train_linear(rows, cfg, language=language, feature_names=names),
    }


def build_registry_dir(out_dir: str | Path, languages: list[str] | None = None,
                       docs_per_language: int = 80, seed: int = 13,
                       cfg: TrainConfig | None = None,
                       corpora: dict[str, list[CorpusRecord]] | None = None) -> Path:
    """Assemble a runnable registry directory.

    Profiles, catalogs, and glossaries are copied from the packaged data;
    models are trained per language, from the supplied corpora or from
    synthetic ones. The result is loadable with ``Registry.load``.
    """
    out = Path(out_dir)
    data = packaged_data_root()
    for sub in ("profiles", "catalogs", "glossaries", "models"):
        (out / sub).mkdir(parents=True, exist_ok=True)
    for profile in sorted((data / "profiles").glob("*.profile")):
        shutil.copy(profile, out / "profiles" / profile.name)
    available = sorted(p.stem for p in (data / "catalogs").glob("*.json"))
    languages = available if languages is None else sorted(languages)
    missing = set(languages) - set(available)
    if missing:
        raise DataError(f"no packaged catalogs for languages: {sorted(missing)}")
    cfg = cfg if cfg is not None else TrainConfig(seed=seed)
    for offset, code in enumerate(languages):
        shutil.copy(data / "catalogs" / f"{code}.json", out / "catalogs" / f"{code}.json")
        shutil.copy(data / "glossaries" / f"{code}.json", out / "glossaries" / f"{code}.json")
        catalog = load_catalog(out / "catalogs" / f"{code}.json")
        glossary = load_glossary(out / "glossaries" / f"{code}.json")
        records = corpora[code] if corpora else synth_corpus(code, docs_per_language, seed + offset)
        models = train_language_models(records, code, cfg, catalog, glossary)
        for kind, model in models.items():
            save_model(model, out / "models" / f"{code}.{kind}.json")
    return out
