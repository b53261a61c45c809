"""Linguistic feature extraction and glossary keyword matching.

A per-language catalog maps feature names (negations, clause conjunctions,
reporting verbs, discourse markers, quote characters) to token matchers; a
per-language glossary lists manipulative-vocabulary terms with explanations.
Extraction runs over a whole tokenized document and produces token-normalized
frequencies plus raw keyword hit counts — the input both SVMs consume and the
explanations are built from.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DataError
from .textprep import Document, tokenize

FORMAT_VERSION = 1

CORE_FEATURES = (
    "negation",
    "clause_purpose",
    "clause_reason",
    "clause_time",
    "reporting_word",
    "discourse_marker",
    "quote_mark",
)

KEYWORD_NGRAM_MAX = 4

KEYWORD_PREFIX = "kw:"


@dataclass(frozen=True)
class MatcherSpec:
    """How one feature matches a token.

    ``lexicon`` matchers compare ``token.lower`` against the entry list,
    either whole (``exact_token``) or as a prefix; ``char_class`` matchers
    fire when every character of the token belongs to the entry set.
    """

    kind: str  # "lexicon" | "char_class"
    entries: tuple[str, ...]
    match_mode: str = "exact_token"  # "exact_token" | "prefix"; ignored for char_class

    def __post_init__(self):
        if self.kind not in ("lexicon", "char_class"):
            raise DataError(f"unknown matcher kind: {self.kind!r}")
        if self.match_mode not in ("exact_token", "prefix"):
            raise DataError(f"unknown match_mode: {self.match_mode!r}")
        if not self.entries:
            raise DataError("matcher entries must be non-empty")
        for entry in self.entries:
            if not entry or entry != entry.lower():
                raise DataError(f"matcher entries must be non-empty lowercase strings, got {entry!r}")

    def matches(self, token_lower: str) -> bool:
        if self.kind == "char_class":
            chars = set("".join(self.entries))
            return bool(token_lower) and all(ch in chars for ch in token_lower)
        if self.match_mode == "exact_token":
            return token_lower in self.entries
        return any(token_lower.startswith(entry) for entry in self.entries)


@dataclass(frozen=True)
class FeatureCatalog:
    language: str
    features: dict[str, MatcherSpec]  # insertion order fixes the model input order

    def __post_init__(self):
        missing = [name for name in CORE_FEATURES if name not in self.features]
        if missing:
            raise DataError("missing core feature: " + ", ".join(missing))

    @property
    def feature_names(self) -> list[str]:
        return list(self.features)


@dataclass(frozen=True)
class GlossaryEntry:
    id: str
    term: str
    explanation: str


@dataclass(frozen=True)
class Glossary:
    language: str
    entries: tuple[GlossaryEntry, ...]

    def __post_init__(self):
        seen_ids: set[str] = set()
        seen_terms: set[str] = set()
        for entry in self.entries:
            if not entry.term:
                raise DataError(f"glossary entry {entry.id!r} has an empty term")
            if not entry.explanation:
                raise DataError(f"glossary entry {entry.id!r} has an empty explanation")
            if entry.id in seen_ids:
                raise DataError(f"duplicate glossary id: {entry.id!r}")
            if entry.term.lower() in seen_terms:
                raise DataError(f"duplicate glossary term: {entry.term!r}")
            seen_ids.add(entry.id)
            seen_terms.add(entry.term.lower())

    def by_id(self, entry_id: str) -> GlossaryEntry:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        raise KeyError(entry_id)


@dataclass(frozen=True)
class FeatureVector:
    """Token-normalized feature frequencies plus raw glossary hit counts."""

    language: str
    values: dict[str, float]
    keyword_hits: dict[str, int]
    word_token_count: int

    def keyword_frequency(self, entry_id: str) -> float:
        if self.word_token_count == 0:
            return 0.0
        return self.keyword_hits.get(entry_id, 0) / self.word_token_count


def model_input_names(catalog: FeatureCatalog, glossary: Glossary) -> list[str]:
    """Canonical model input order: catalog features, then keyword coordinates."""
    return catalog.feature_names + [KEYWORD_PREFIX + e.id for e in glossary.entries]


def model_input(vector: FeatureVector, feature_names: list[str]) -> np.ndarray:
    """Assemble the numeric vector a model consumes, in its stored name order."""
    out = np.empty(len(feature_names))
    for i, name in enumerate(feature_names):
        if name.startswith(KEYWORD_PREFIX):
            out[i] = vector.keyword_frequency(name[len(KEYWORD_PREFIX) :])
        else:
            if name not in vector.values:
                raise ValueError(f"feature vector lacks {name!r} required by the model")
            out[i] = vector.values[name]
    return out


def extract_features(doc: Document, catalog: FeatureCatalog, glossary: Glossary) -> FeatureVector:
    """Count matcher and keyword hits over the whole document.

    Feature counts are divided by the number of word tokens (punctuation
    excluded), so the vector is invariant under document self-concatenation.
    Keyword terms are matched as consecutive lowercased token n-grams of up
    to four tokens; hits stay raw counts.
    """
    if not (doc.language == catalog.language == glossary.language):
        raise DataError(
            "catalog/document language mismatch: "
            f"document={doc.language!r} catalog={catalog.language!r} glossary={glossary.language!r}"
        )
    word_count = sum(1 for t in doc.tokens if t.is_word)
    counts = dict.fromkeys(catalog.features, 0)
    for token in doc.tokens:
        for name, matcher in catalog.features.items():
            if matcher.matches(token.lower):
                counts[name] += 1
    if word_count == 0:
        values = dict.fromkeys(catalog.features, 0.0)
    else:
        values = {name: count / word_count for name, count in counts.items()}

    lowers = [t.lower for t in doc.tokens]
    hits: dict[str, int] = {}
    for entry in glossary.entries:
        term_tokens = [t.lower for t in tokenize(entry.term, doc.language)]
        n = len(term_tokens)
        if not 1 <= n <= KEYWORD_NGRAM_MAX:
            continue
        count = sum(1 for i in range(len(lowers) - n + 1) if lowers[i : i + n] == term_tokens)
        if count:
            hits[entry.id] = count
    return FeatureVector(
        language=doc.language, values=values, keyword_hits=hits, word_token_count=word_count
    )


def load_catalog(path: str | Path) -> FeatureCatalog:
    raw = _load_json(path, kind="catalog")
    features: dict[str, MatcherSpec] = {}
    for item in raw.get("features", []):
        name = item.get("name")
        if not name:
            raise DataError(f"{path}: catalog feature without a name")
        if name in features:
            raise DataError(f"{path}: duplicate feature name {name!r}")
        features[name] = MatcherSpec(
            kind=item.get("kind", "lexicon"),
            entries=tuple(item.get("entries", [])),
            match_mode=item.get("match_mode", "exact_token"),
        )
    return FeatureCatalog(language=raw["language"], features=features)


def save_catalog(catalog: FeatureCatalog, path: str | Path) -> None:
    payload = {
        "format_version": FORMAT_VERSION,
        "language": catalog.language,
        "features": [
            {
                "name": name,
                "kind": spec.kind,
                "match_mode": spec.match_mode,
                "entries": list(spec.entries),
            }
            for name, spec in catalog.features.items()
        ],
    }
    _dump_json(payload, path)


def load_glossary(path: str | Path) -> Glossary:
    raw = _load_json(path, kind="glossary")
    entries = []
    for item in raw.get("entries", []):
        entry = GlossaryEntry(
            id=item.get("id", ""), term=item.get("term", ""), explanation=item.get("explanation", "")
        )
        if not entry.id:
            raise DataError(f"{path}: glossary entry without an id")
        term_len = len(tokenize(entry.term, raw["language"]))
        if term_len > KEYWORD_NGRAM_MAX:
            raise DataError(
                f"{path}: term {entry.term!r} spans {term_len} tokens; matching window is {KEYWORD_NGRAM_MAX}"
            )
        entries.append(entry)
    return Glossary(language=raw["language"], entries=tuple(entries))


def save_glossary(glossary: Glossary, path: str | Path) -> None:
    payload = {
        "format_version": FORMAT_VERSION,
        "language": glossary.language,
        "entries": [
            {"id": e.id, "term": e.term, "explanation": e.explanation} for e in glossary.entries
        ],
    }
    _dump_json(payload, path)


def _load_json(path: str | Path, kind: str) -> dict:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"{path}: cannot read {kind} file: {exc}") from exc
    if raw.get("format_version") != FORMAT_VERSION:
        raise DataError(f"{path}: unsupported {kind} format_version {raw.get('format_version')!r}")
    if "language" not in raw:
        raise DataError(f"{path}: {kind} file lacks a language tag")
    return raw


def _dump_json(payload: dict, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
