"""Tokenization, fixed-size chunking, and the chunk-verdict aggregation rule.

The document scorer has a 520-token budget per call, so longer texts are cut
into consecutive chunks and a single propaganda-positive chunk marks the
whole document positive.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .errors import NewsCheckError
from .labels import LABEL_NONE, LABEL_PROPAGANDA

MAX_CHUNK_TOKENS = 520

# A token is a maximal run of word characters, or a single non-space symbol.
_TOKEN = re.compile(r"\w+|[^\w\s]")


@dataclass(frozen=True)
class Token:
    surface: str
    lower: str
    is_word: bool
    offset: int

    @property
    def end(self) -> int:
        return self.offset + len(self.surface)


@dataclass(frozen=True)
class Chunk:
    token_start: int
    token_end: int  # exclusive

    def __len__(self) -> int:
        return self.token_end - self.token_start


@dataclass(frozen=True)
class Document:
    """Raw text with its language tag, token stream, and chunk list."""

    raw: str
    language: str
    tokens: list[Token] = field(default_factory=list)
    chunks: list[Chunk] = field(default_factory=list)

    def chunk_text(self, chunk: Chunk) -> str:
        """The raw substring spanned by a chunk's tokens, original spacing kept."""
        first = self.tokens[chunk.token_start]
        last = self.tokens[chunk.token_end - 1]
        return self.raw[first.offset : last.end]


def tokenize(raw: str, language: str) -> list[Token]:
    """Unicode-aware split: word runs stay together, punctuation stands alone.

    ``is_word`` is False for tokens containing no letter or digit. The
    language tag is accepted for interface symmetry; tokenization itself is
    language-independent.
    """
    del language
    tokens = []
    for match in _TOKEN.finditer(raw):
        surface = match.group(0)
        tokens.append(
            Token(
                surface=surface,
                lower=surface.lower(),
                is_word=any(ch.isalnum() for ch in surface),
                offset=match.start(),
            )
        )
    return tokens


def chunk(tokens: list[Token], max_len: int = MAX_CHUNK_TOKENS) -> list[Chunk]:
    """Greedy left-to-right packing into spans of exactly ``max_len`` tokens.

    The final span holds the remainder; an empty token list yields no chunks.
    """
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    return [Chunk(start, min(start + max_len, len(tokens))) for start in range(0, len(tokens), max_len)]


def make_document(raw: str, language: str, max_len: int = MAX_CHUNK_TOKENS) -> Document:
    tokens = tokenize(raw, language)
    return Document(raw=raw, language=language, tokens=tokens, chunks=chunk(tokens, max_len))


def aggregate_chunk_verdicts(chunk_results: list[tuple[str, float]]) -> tuple[str, float]:
    """Combine per-chunk verdicts into a document verdict.

    Any propaganda-labeled chunk makes the document propaganda, reported with
    the maximum propaganda probability among those chunks; otherwise the
    document is clean with the mean of the chunks' (1 - prob) as its
    probability. Order of the input list never matters.
    """
    if not chunk_results:
        raise NewsCheckError("no chunks")
    for label, prob in chunk_results:
        if not 0.0 <= prob <= 1.0:
            raise ValueError(f"chunk probability out of range: {prob!r}")
        if label not in (LABEL_PROPAGANDA, LABEL_NONE):
            raise ValueError(f"unknown chunk label: {label!r}")
    positive = [prob for label, prob in chunk_results if label == LABEL_PROPAGANDA]
    if positive:
        return LABEL_PROPAGANDA, max(positive)
    negatives = [1.0 - prob for _, prob in chunk_results]
    # fsum: the mean must not depend on chunk order, down to the last ulp
    return LABEL_NONE, math.fsum(negatives) / len(negatives)
