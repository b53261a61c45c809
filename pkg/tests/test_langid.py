import math
from collections import Counter

import pytest

from newscheck.errors import DataError, NewsCheckError
from newscheck.langid import (
    SUPPORTED_LANGUAGES,
    build_profile,
    detect_language,
    is_supported,
    load_profile,
    normalize,
    save_profile,
    trigrams,
)

GERMAN_SENTENCE = "Der Bundeskanzler sprach über die Energiepolitik der Bundesregierung."


def test_build_profile_single_trigram_dominates():
    profile = build_profile(["aaaa" * 250], "xx")
    best = max(profile.trigram_log_probs, key=profile.trigram_log_probs.get)
    assert best == "aaa"


def test_build_profile_rejects_small_corpus():
    with pytest.raises(DataError, match="insufficient profile data"):
        build_profile(["ab"], "xx")
    with pytest.raises(DataError, match="insufficient profile data"):
        build_profile(["aaaa"], "xx")


def test_profile_probabilities_sum_to_one(data_root):
    for path in sorted((data_root / "profiles").glob("*.profile")):
        profile = load_profile(path)
        total = math.fsum(math.exp(lp) for lp in profile.trigram_log_probs.values())
        total += math.exp(profile.fallback_log_prob)
        assert total == pytest.approx(1.0, abs=1e-9)


def test_german_profile_matches_direct_counts(data_root):
    # independent oracle: count trigrams of the seed corpus directly
    seed_lines = (data_root / "seeds" / "de.txt").read_text(encoding="utf-8").splitlines()
    profile = build_profile(seed_lines, "de")
    counts = Counter()
    for line in seed_lines:
        counts.update(trigrams(line))
    denom = sum(counts.values()) + len(counts) + 1
    for gram in ("sch", "der", " de"):
        assert profile.trigram_log_probs[gram] == pytest.approx(math.log((counts[gram] + 1) / denom))
    assert math.exp(profile.log_prob("sch")) > math.exp(profile.log_prob("the"))


def test_detects_german_with_confidence(profiles):
    tag, confidence = detect_language(GERMAN_SENTENCE, profiles)
    assert tag == "de"
    assert confidence > 0.5


def test_argmax_agrees_with_bruteforce_scoring(profiles):
    # oracle: total log-likelihood summed trigram by trigram
    grams = trigrams(GERMAN_SENTENCE)
    scores = {p.code: sum(p.log_prob(g) for g in grams) for p in profiles}
    best = min((-s, code) for code, s in scores.items())[1]
    tag, _ = detect_language(GERMAN_SENTENCE, profiles)
    assert tag == best == "de"


def test_empty_input_rejected(profiles):
    with pytest.raises(NewsCheckError, match="empty input"):
        detect_language("", profiles)
    with pytest.raises(NewsCheckError, match="empty input"):
        detect_language("   \n\t ", profiles)


def test_short_text_confidence_capped(profiles):
    tag, confidence = detect_language("ok", profiles)
    assert confidence <= 0.5
    assert len(tag) == 2


def test_confidence_in_unit_interval(profiles):
    for text in ("a", "ok then", GERMAN_SENTENCE, "1234 5678", "ээээ не так"):
        _, confidence = detect_language(text, profiles)
        assert 0.0 <= confidence <= 1.0


def test_profile_order_never_changes_result(profiles):
    texts = [GERMAN_SENTENCE, "The committee approved the harbour plan.", "ну що ж, добре"]
    for text in texts:
        tag, conf = detect_language(text, profiles)
        tag_rev, conf_rev = detect_language(text, list(reversed(profiles)))
        assert (tag, conf) == (tag_rev, conf_rev)


def test_detection_deterministic(profiles):
    assert detect_language(GERMAN_SENTENCE, profiles) == detect_language(GERMAN_SENTENCE, profiles)


def test_is_supported_set():
    assert is_supported("de")
    assert is_supported("it")
    assert not is_supported("zh")
    assert not is_supported("es")
    assert set(SUPPORTED_LANGUAGES) == {"en", "ru", "uk", "fr", "ro", "de", "it"}


def test_profile_file_round_trip(tmp_path):
    profile = build_profile(["the quick brown fox jumps over the lazy dog. " * 30], "xx")
    path = tmp_path / "xx.profile"
    save_profile(profile, path)
    loaded = load_profile(path)
    assert loaded.code == "xx"
    assert loaded.trigram_log_probs == profile.trigram_log_probs
    assert loaded.fallback_log_prob == pytest.approx(profile.fallback_log_prob, abs=1e-9)
    header = path.read_text(encoding="utf-8").splitlines()[0]
    assert header == f"lang=xx ngrams={len(profile.trigram_log_probs)}"


def test_load_profile_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.profile"
    path.write_text("nonsense\nabc\t-1.0\n", encoding="utf-8")
    with pytest.raises(DataError, match="bad profile header"):
        load_profile(path)


def test_normalize_collapses_whitespace():
    assert normalize("  A\tB\nC  ") == "a b c"


def test_holdout_accuracy(profiles, fixtures_dir):
    total = correct = 0
    for path in sorted((fixtures_dir / "langid").glob("*.txt")):
        gold = path.stem
        lines = [l for l in path.read_text(encoding="utf-8").splitlines() if l.strip()]
        assert len(lines) == 50
        assert all(len(l) >= 40 for l in lines)
        for line in lines:
            tag, _ = detect_language(line, profiles)
            total += 1
            correct += tag == gold
    assert correct / total >= 0.95
