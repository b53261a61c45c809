"""Loaded-artifact registry: language profiles plus, per language, the
catalog, glossary, and the three trained models.

A registry directory has four subtrees::

    registry/
      profiles/<code>.profile
      catalogs/<code>.json
      glossaries/<code>.json
      models/<code>.{linear,kernel,ngram}.json

Catalogs, glossaries, and profiles for the seven supported languages ship
with the package (``newscheck/data``); models are trained artifacts. A
language whose specific models are missing falls back to ``multi.*`` models
when those exist. Everything is immutable after load and safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DataError, NewsCheckError
from .features import (
    FeatureCatalog,
    Glossary,
    load_catalog,
    load_glossary,
    model_input_names,
)
from .langid import LanguageProfile, load_profiles
from .models import KernelModel, LinearModel, NgramScorer, load_model

MULTI = "multi"


def packaged_data_root() -> Path:
    """The data tree shipped inside the package (profiles, catalogs, glossaries)."""
    return Path(resources.files("newscheck") / "data")


@dataclass(frozen=True)
class LanguageBundle:
    language: str
    catalog: FeatureCatalog
    glossary: Glossary
    linear: LinearModel
    kernel: KernelModel
    scorer: NgramScorer


class Registry:
    def __init__(self, profiles: list[LanguageProfile], catalogs: dict[str, FeatureCatalog],
                 glossaries: dict[str, Glossary], models: dict[str, dict[str, object]]):
        self.profiles = profiles
        self._catalogs = catalogs
        self._glossaries = glossaries
        self._models = models  # language -> {"linear"|"kernel"|"ngram": model}
        self._validate()

    def _validate(self) -> None:
        if not self.profiles:
            raise DataError("registry has no language profiles")
        for code, models in self._models.items():
            linear = models.get("linear")
            if linear is None or code == MULTI:
                continue
            catalog = self._catalogs.get(code)
            glossary = self._glossaries.get(code)
            if catalog is None or glossary is None:
                continue
            expected = model_input_names(catalog, glossary)
            if list(linear.feature_names) != expected:
                raise DataError(
                    f"linear model for {code!r} disagrees with catalog/glossary feature order"
                )

    @classmethod
    def load(cls, root: str | Path) -> "Registry":
        root = Path(root)
        if not root.is_dir():
            raise DataError(f"registry directory not found: {root}")
        profiles = load_profiles(root / "profiles")
        catalogs = {}
        for path in sorted((root / "catalogs").glob("*.json")):
            catalog = load_catalog(path)
            catalogs[catalog.language] = catalog
        glossaries = {}
        for path in sorted((root / "glossaries").glob("*.json")):
            glossary = load_glossary(path)
            glossaries[glossary.language] = glossary
        models: dict[str, dict[str, object]] = {}
        models_dir = root / "models"
        if models_dir.is_dir():
            for path in sorted(models_dir.glob("*.json")):
                model = load_model(path)
                kind = (
                    "linear" if isinstance(model, LinearModel)
                    else "kernel" if isinstance(model, KernelModel)
                    else "ngram"
                )
                models.setdefault(model.language, {})[kind] = model
        return cls(profiles=profiles, catalogs=catalogs, glossaries=glossaries, models=models)

    def languages(self) -> list[str]:
        """Languages with catalog, glossary, and all three models available
        (their own or through the multi fallback)."""
        out = []
        for code in sorted(set(self._catalogs) & set(self._glossaries)):
            try:
                self.bundle(code)
            except NewsCheckError:
                continue
            out.append(code)
        return out

    def catalog(self, language: str) -> FeatureCatalog:
        try:
            return self._catalogs[language]
        except KeyError:
            raise DataError(f"no feature catalog for language {language!r}") from None

    def glossary(self, language: str) -> Glossary:
        try:
            return self._glossaries[language]
        except KeyError:
            raise DataError(f"no glossary for language {language!r}") from None

    def _model(self, language: str, kind: str):
        for scope in (language, MULTI):
            model = self._models.get(scope, {}).get(kind)
            if model is not None:
                return model
        raise NewsCheckError(f"missing model for language: no {kind} model for {language!r}")

    def bundle(self, language: str) -> LanguageBundle:
        return LanguageBundle(
            language=language,
            catalog=self.catalog(language),
            glossary=self.glossary(language),
            linear=self._model(language, "linear"),
            kernel=self._model(language, "kernel"),
            scorer=self._model(language, "ngram"),
        )

    def inventory(self) -> dict:
        """Health-check view: what is loaded for which language."""
        langs = sorted(set(self._catalogs) | set(self._glossaries) | set(self._models) - {MULTI})
        return {
            "languages": self.languages(),
            "detail": {
                code: {
                    "catalog": code in self._catalogs,
                    "glossary": code in self._glossaries,
                    "linear": self._has_model(code, "linear"),
                    "kernel": self._has_model(code, "kernel"),
                    "ngram": self._has_model(code, "ngram"),
                }
                for code in langs
            },
        }

    def _has_model(self, language: str, kind: str) -> bool:
        try:
            self._model(language, kind)
            return True
        except NewsCheckError:
            return False
