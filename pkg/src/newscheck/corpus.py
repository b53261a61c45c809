"""Corpus file IO.

A corpus is line-delimited JSON, one record per line with ``text``,
``label`` ("propaganda" or "none"), and ``language``. The format streams,
diffs, and is comfortable at desk scale.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import DataError
from .labels import (
    CORPUS_LABEL_NONE,
    CORPUS_LABEL_PROPAGANDA,
    LABEL_NONE,
    LABEL_PROPAGANDA,
)

_LANGUAGE_TAG = re.compile(r"[a-z]{2}")

_FILE_TO_VERDICT = {CORPUS_LABEL_PROPAGANDA: LABEL_PROPAGANDA, CORPUS_LABEL_NONE: LABEL_NONE}
_VERDICT_TO_FILE = {v: k for k, v in _FILE_TO_VERDICT.items()}


@dataclass(frozen=True)
class CorpusRecord:
    text: str
    label: str  # verdict label (Propaganda / NoPropaganda)
    language: str


def load_corpus(path: str | Path) -> list[CorpusRecord]:
    path = Path(path)
    records = []
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise DataError(f"{path}: cannot read corpus: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}:{lineno}: bad corpus record: {exc}") from exc
        text = raw.get("text")
        label = raw.get("label")
        language = raw.get("language")
        if not isinstance(text, str) or not text.strip():
            raise DataError(f"{path}:{lineno}: corpus record without text")
        if label not in _FILE_TO_VERDICT:
            raise DataError(
                f"{path}:{lineno}: label must be one of {sorted(_FILE_TO_VERDICT)}, got {label!r}"
            )
        if not isinstance(language, str) or not _LANGUAGE_TAG.fullmatch(language):
            raise DataError(f"{path}:{lineno}: invalid language tag {language!r}")
        records.append(CorpusRecord(text=text, label=_FILE_TO_VERDICT[label], language=language))
    if not records:
        raise DataError(f"{path}: corpus is empty")
    return records


def save_corpus(records: Iterable[CorpusRecord], path: str | Path) -> None:
    lines = []
    for record in records:
        lines.append(
            json.dumps(
                {
                    "text": record.text,
                    "label": _VERDICT_TO_FILE[record.label],
                    "language": record.language,
                },
                ensure_ascii=False,
            )
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
