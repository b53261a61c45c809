import json

import pytest

from newscheck.corpus import CorpusRecord, load_corpus, save_corpus
from newscheck.errors import DataError
from newscheck.labels import LABEL_NONE, LABEL_PROPAGANDA
from newscheck.synthesis import MATERIAL, synth_corpus, synth_document


def test_round_trip(tmp_path):
    records = [
        CorpusRecord(text="Первый текст.", label=LABEL_PROPAGANDA, language="ru"),
        CorpusRecord(text="Second text.", label=LABEL_NONE, language="en"),
    ]
    path = tmp_path / "corpus.jsonl"
    save_corpus(records, path)
    assert load_corpus(path) == records
    lines = path.read_text(encoding="utf-8").strip().splitlines()
    assert json.loads(lines[0])["label"] == "propaganda"
    assert json.loads(lines[1])["label"] == "none"


def test_load_rejects_bad_label(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"text": "x", "label": "maybe", "language": "en"}\n', encoding="utf-8")
    with pytest.raises(DataError, match="label must be one of"):
        load_corpus(path)


def test_load_rejects_bad_language(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"text": "x", "label": "none", "language": "english"}\n', encoding="utf-8")
    with pytest.raises(DataError, match="invalid language tag"):
        load_corpus(path)


def test_load_rejects_missing_text(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"label": "none", "language": "en"}\n', encoding="utf-8")
    with pytest.raises(DataError, match="without text"):
        load_corpus(path)


def test_load_rejects_broken_json(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"text": "x", "label": "none"\n', encoding="utf-8")
    with pytest.raises(DataError, match="bad corpus record"):
        load_corpus(path)


def test_load_reports_line_numbers(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text(
        '{"text": "ok", "label": "none", "language": "en"}\nnot json\n', encoding="utf-8"
    )
    with pytest.raises(DataError, match=":2:"):
        load_corpus(path)


def test_empty_corpus_rejected(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("\n\n", encoding="utf-8")
    with pytest.raises(DataError, match="corpus is empty"):
        load_corpus(path)


def test_synth_corpus_balanced_and_seeded():
    corpus = synth_corpus("de", 40, seed=7)
    assert len(corpus) == 40
    assert sum(1 for r in corpus if r.label == LABEL_PROPAGANDA) == 20
    assert all(r.language == "de" for r in corpus)
    again = synth_corpus("de", 40, seed=7)
    assert corpus == again
    different = synth_corpus("de", 40, seed=8)
    assert corpus != different


def test_synth_documents_use_class_markers():
    import random

    rng = random.Random(1)
    prop = synth_document("it", LABEL_PROPAGANDA, rng)
    clean = synth_document("it", LABEL_NONE, rng)
    assert any(s in prop for s in [m[:30] for m in MATERIAL["it"]["propaganda"]])
    assert any(s in clean for s in [m[:30] for m in MATERIAL["it"]["clean"]])


def test_synth_rejects_unknown_language():
    with pytest.raises(DataError, match="no synthesis material"):
        synth_corpus("xx", 10)


def test_all_supported_languages_have_material():
    assert set(MATERIAL) == {"de", "en", "fr", "it", "ro", "ru", "uk"}
    for language, pools in MATERIAL.items():
        assert len(pools["fillers"]) >= 10
        assert len(pools["propaganda"]) >= 6
        assert len(pools["clean"]) >= 6
