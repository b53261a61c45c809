import pytest
from hypothesis import given, strategies as st

from newscheck.errors import NewsCheckError
from newscheck.labels import LABEL_NONE, LABEL_PROPAGANDA
from newscheck.textprep import (
    aggregate_chunk_verdicts,
    chunk,
    make_document,
    tokenize,
)


def surfaces(tokens):
    return [t.surface for t in tokens]


def test_tokenize_separates_punctuation():
    tokens = tokenize("He did not go.", "en")
    assert surfaces(tokens) == ["He", "did", "not", "go", "."]
    assert [t.is_word for t in tokens] == [True, True, True, True, False]


def test_tokenize_cyrillic_quotes():
    tokens = tokenize("«Киев» — это", "ru")
    assert surfaces(tokens) == ["«", "Киев", "»", "—", "это"]
    assert [t.is_word for t in tokens] == [False, True, False, False, True]


def test_tokenize_empty():
    assert tokenize("", "en") == []


def test_token_offsets_and_lowercase():
    raw = "Word, WORD word"
    tokens = tokenize(raw, "en")
    offsets = [t.offset for t in tokens]
    assert offsets == sorted(offsets) and len(set(offsets)) == len(offsets)
    for token in tokens:
        assert raw[token.offset : token.end] == token.surface
        assert token.lower == token.surface.lower()


@given(st.text(max_size=300))
def test_tokenize_offsets_strictly_increasing(raw):
    tokens = tokenize(raw, "xx")
    for a, b in zip(tokens, tokens[1:]):
        assert a.offset < b.offset
        assert a.end <= b.offset


def test_chunk_sizes_1200():
    tokens = tokenize(" ".join(f"w{i}" for i in range(1200)), "en")
    chunks = chunk(tokens, 520)
    assert [len(c) for c in chunks] == [520, 520, 160]


def test_chunk_exactly_max():
    tokens = tokenize(" ".join(f"w{i}" for i in range(520)), "en")
    assert [len(c) for c in chunk(tokens, 520)] == [520]


def test_chunk_empty():
    assert chunk([], 520) == []


def test_chunk_rejects_bad_max_len():
    with pytest.raises(ValueError):
        chunk([], 0)


@given(st.integers(min_value=0, max_value=5000))
def test_chunk_partitions_tokens(n):
    tokens = tokenize(" ".join("w" for _ in range(n)), "en")
    chunks = chunk(tokens, 520)
    assert sum(len(c) for c in chunks) == n
    spans = [(c.token_start, c.token_end) for c in chunks]
    assert spans == sorted(spans)
    for (_, end), (start, _) in zip(spans, spans[1:]):
        assert end == start
    if chunks:
        assert all(len(c) == 520 for c in chunks[:-1])
        assert 1 <= len(chunks[-1]) <= 520


def test_document_chunk_text_round_trip():
    raw = "One two three. Four five — six seven."
    doc = make_document(raw, "en", max_len=3)
    rebuilt = " ".join(doc.chunk_text(c) for c in doc.chunks)
    # chunk texts are raw slices; tokens survive in order
    assert [t.surface for t in doc.tokens] == surfaces(tokenize(" ".join(
        doc.chunk_text(c) for c in doc.chunks), "en"))
    assert doc.chunk_text(doc.chunks[0]).startswith("One")


def test_aggregate_any_positive_wins():
    results = [(LABEL_NONE, 0.2), (LABEL_PROPAGANDA, 0.9), (LABEL_PROPAGANDA, 0.7)]
    assert aggregate_chunk_verdicts(results) == (LABEL_PROPAGANDA, 0.9)


def test_aggregate_all_negative_means():
    assert aggregate_chunk_verdicts([(LABEL_NONE, 0.1), (LABEL_NONE, 0.3)]) == (
        LABEL_NONE,
        pytest.approx(0.8),
    )


def test_aggregate_singleton():
    assert aggregate_chunk_verdicts([(LABEL_PROPAGANDA, 0.51)]) == (LABEL_PROPAGANDA, 0.51)


def test_aggregate_empty_rejected():
    with pytest.raises(NewsCheckError, match="no chunks"):
        aggregate_chunk_verdicts([])


@given(
    st.lists(
        st.tuples(st.sampled_from([LABEL_PROPAGANDA, LABEL_NONE]),
                  st.floats(min_value=0.0, max_value=1.0)),
        min_size=1,
        max_size=12,
    ),
    st.randoms(),
)
def test_aggregate_permutation_invariant(results, rng):
    expected = aggregate_chunk_verdicts(results)
    shuffled = list(results)
    rng.shuffle(shuffled)
    assert aggregate_chunk_verdicts(shuffled) == expected


@given(
    st.lists(
        st.tuples(st.sampled_from([LABEL_PROPAGANDA, LABEL_NONE]),
                  st.floats(min_value=0.0, max_value=1.0)),
        min_size=1,
        max_size=12,
    ),
    st.floats(min_value=0.0, max_value=1.0),
)
def test_aggregate_adding_positive_chunk_monotone(results, prob):
    label, _ = aggregate_chunk_verdicts(results + [(LABEL_PROPAGANDA, prob)])
    assert label == LABEL_PROPAGANDA
