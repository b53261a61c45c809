"""Character-trigram language identification.

Each language gets a naive-Bayes profile: an add-one-smoothed distribution
over the character trigrams of a seed corpus (lowercased, whitespace
collapsed to single spaces). Detection scores a text against every loaded
profile by total trigram log-likelihood, unseen trigrams falling back to the
reserved smoothing mass. Profiles for the seven natively supported languages
ship with the package and can be rebuilt from the committed seed texts.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError, NewsCheckError

SUPPORTED_LANGUAGES = ("de", "en", "fr", "it", "ro", "ru", "uk")

# Below this many characters trigram evidence is too thin to trust.
SHORT_TEXT_CHARS = 20
SHORT_TEXT_MAX_CONFIDENCE = 0.5

_MIN_PROFILE_CHARS = 1000

_WHITESPACE = re.compile(r"\s+")


def normalize(text: str) -> str:
    """Lowercase and collapse every whitespace run to a single space."""
    return _WHITESPACE.sub(" ", text.lower()).strip()


def trigrams(text: str) -> list[str]:
    normalized = normalize(text)
    return [normalized[i : i + 3] for i in range(len(normalized) - 2)]


@dataclass(frozen=True)
class LanguageProfile:
    """Smoothed trigram distribution for one language.

    ``trigram_log_probs`` plus ``fallback_log_prob`` (the shared mass of any
    unseen trigram) exponentiate and sum to 1 over vocabulary + fallback.
    """

    code: str
    trigram_log_probs: dict[str, float]
    fallback_log_prob: float

    def log_prob(self, trigram: str) -> float:
        return self.trigram_log_probs.get(trigram, self.fallback_log_prob)

    def score(self, text: str) -> float:
        """Total log-likelihood of the text's trigrams under this profile."""
        return sum(map(self.log_prob, trigrams(text)))


def build_profile(corpus: list[str], code: str) -> LanguageProfile:
    """Estimate an add-one-smoothed trigram profile from seed texts.

    Requires at least 1000 characters of corpus text in total; smaller
    corpora produce profiles too noisy to be worth loading.
    """
    if sum(len(t) for t in corpus) < _MIN_PROFILE_CHARS:
        raise DataError(f"insufficient profile data for {code!r}: need >= {_MIN_PROFILE_CHARS} chars")
    counts: Counter[str] = Counter()
    for text in corpus:
        counts.update(trigrams(text))
    if not counts:
        raise DataError(f"insufficient profile data for {code!r}: no trigrams")
    total = sum(counts.values())
    denom = total + len(counts) + 1  # +1 reserves the unseen-trigram mass
    log_probs = {t: math.log((c + 1) / denom) for t, c in counts.items()}
    return LanguageProfile(code=code, trigram_log_probs=log_probs, fallback_log_prob=math.log(1.0 / denom))


def detect_language(text: str, profiles: list[LanguageProfile]) -> tuple[str, float]:
    """Return the best-scoring language tag and a confidence in [0, 1].

    Confidence is the gap between the best and second-best profile expressed
    as 1 minus their per-trigram likelihood ratio, so it is 0 at an exact tie
    and approaches 1 as the runner-up becomes implausible. Ties on score are
    broken by lexicographic tag order; texts shorter than 20 characters are
    answered with confidence capped at 0.5.
    """
    normalized = normalize(text)
    if not normalized:
        raise NewsCheckError("empty input")
    if not profiles:
        raise NewsCheckError("no language profiles loaded")
    grams = trigrams(normalized)
    n = max(len(grams), 1)
    scored = sorted(
        ((sum(map(p.log_prob, grams)), p.code) for p in profiles),
        key=lambda pair: (-pair[0], pair[1]),
    )
    best_score, best_code = scored[0]
    if len(scored) == 1:
        confidence = 1.0
    else:
        second_score = scored[1][0]
        confidence = 1.0 - math.exp((second_score - best_score) / n)
    if len(normalized) < SHORT_TEXT_CHARS:
        confidence = min(confidence, SHORT_TEXT_MAX_CONFIDENCE)
    return best_code, confidence


def is_supported(tag: str) -> bool:
    return tag in SUPPORTED_LANGUAGES


def save_profile(profile: LanguageProfile, path: str | Path) -> None:
    """Write the versioned text format: header line, then trigram<TAB>log_prob."""
    lines = [f"lang={profile.code} ngrams={len(profile.trigram_log_probs)}"]
    for trigram, lp in sorted(profile.trigram_log_probs.items()):
        lines.append(f"{trigram}\t{lp!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_profile(path: str | Path) -> LanguageProfile:
    """Load a profile file, deriving the fallback mass from the stored rows.

    The smoothed probabilities plus the unseen-trigram mass sum to exactly 1,
    so the fallback is recovered as 1 - sum(exp(log_prob)) without a
    dedicated header field.
    """
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise DataError(f"{path}: empty profile file")
    header = re.fullmatch(r"lang=(\S+) ngrams=(\d+)", lines[0])
    if not header:
        raise DataError(f"{path}: bad profile header {lines[0]!r}")
    code, declared = header.group(1), int(header.group(2))
    log_probs: dict[str, float] = {}
    for line in lines[1:]:
        if not line:
            continue
        try:
            trigram, lp = line.split("\t")
        except ValueError as exc:
            raise DataError(f"{path}: bad profile line {line!r}") from exc
        log_probs[trigram] = float(lp)
    if len(log_probs) != declared:
        raise DataError(f"{path}: header declares {declared} ngrams, file has {len(log_probs)}")
    if not log_probs:
        raise DataError(f"{path}: profile has no trigrams")
    mass = math.fsum(math.exp(lp) for lp in log_probs.values())
    fallback = 1.0 - mass
    if not 0.0 < fallback < 1.0:
        raise DataError(f"{path}: probabilities do not leave a valid fallback mass (sum={mass!r})")
    return LanguageProfile(code=code, trigram_log_probs=log_probs, fallback_log_prob=math.log(fallback))


def load_profiles(directory: str | Path) -> list[LanguageProfile]:
    """Load every ``*.profile`` file in a directory, sorted by language tag."""
    directory = Path(directory)
    profiles = [load_profile(p) for p in sorted(directory.glob("*.profile"))]
    if not profiles:
        raise DataError(f"no .profile files in {directory}")
    return profiles
