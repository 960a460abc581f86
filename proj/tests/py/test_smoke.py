"""Smoke tests for the Python bindings: import, tokenize, fixtures, model I/O."""

import os

import pytest

import biotok

DATA_DIR = os.environ.get("BIOTOK_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def data(name):
    return os.path.join(DATA_DIR, name)


def test_strategies_and_profiles():
    assert biotok.strategies() == ["whitespace", "ptb", "web", "biomed", "r_basic"]
    assert biotok.profiles() == ["ptb", "web", "biomed", "r_basic"]


def test_tokenize_round_trip_with_spans():
    text = "IL-2 levels (p = 0.05)."
    tokens = biotok.tokenize(text, "biomed")
    assert tokens[0] == "IL-2"
    spans = biotok.tokenize_spans(text, "biomed")
    assert [t.text for t in spans.tokens] == tokens
    for t in spans.tokens:
        assert text[t.start : t.end] == t.text


def test_unknown_strategy_raises():
    with pytest.raises(ValueError):
        biotok.tokenize("x", "nope")


def test_fixture_row_matches_live_output():
    corpus = dict(biotok.load_corpus(data("corpus.jsonl")))
    rows = biotok.load_fixtures(data("fixtures.jsonl"))
    assert len(rows) == 192
    checked = 0
    for sentence_id, profile, tokens in rows:
        if profile in biotok.strategies():
            assert biotok.tokenize(corpus[sentence_id], profile) == tokens
            checked += 1
    assert checked == 120


def test_ruleset_load_and_trace():
    rs = biotok.RuleSet.load(data("profiles/biomed.json"))
    assert rs.name == "biomed"
    assert rs.tokenize("x-ray.") == ["x", "-", "ray", "."]
    trace = rs.trace("(i.e.")
    assert trace.pieces == ["(", "i.e."]
    assert [s.kind for s in trace.steps] == ["prefix", "special"]

    custom = biotok.RuleSet()
    custom.name = "custom"
    custom.suffixes = ["[!?]$"]
    custom.compile()
    assert custom.tokenize("wow!") == ["wow", "!"]


def test_tags_round_trip():
    text = "ab cd"
    tags = biotok.derive_tags(text, ["ab", "cd"])
    assert tags == "BEOBE"
    decoded = biotok.decode_tags(text, tags)
    assert decoded.texts() == ["ab", "cd"]


def test_tagger_train_save_load(tmp_path):
    texts = [t for _, t in biotok.load_corpus(data("corpus.jsonl"))]
    model = biotok.Tagger.train(texts, epochs=3)
    assert model.n_features > 0
    path = str(tmp_path / "model.json")
    model.save(path)
    loaded = biotok.Tagger.load(path)
    sample = "IL-2 rose 2.6kb."
    assert loaded.tag(sample) == model.tag(sample)
    assert loaded.tokenize(sample) == model.tokenize(sample)
    score = loaded.evaluate(texts)
    assert score.tag_accuracy > 0.9


def test_metrics_and_vectorize():
    assert biotok.jaccard({"a", "b"}, {"b", "c"}) == pytest.approx(1 / 3)
    assert biotok.distinct_outputs([["a"], ["a"], ["b"]]) == 2
    assert biotok.token_counts(["a", "b", "a"]) == (2, 3)
    assert biotok.normalize(["The", "IL-2", ","], case="lower", drop_punct=True) == [
        "the",
        "il-2",
    ]

    docs = [["a", "b", "a", "c"]]
    terms, cells = biotok.cooccurrence_matrix(docs, window=2)
    assert terms == ["a", "b", "c"]
    counts = {(i, j): n for i, j, n in cells}
    assert counts[(0, 1)] == 2
    terms2, dtm = biotok.doc_term_matrix(docs)
    assert sum(n for _, _, n in dtm) == 4
