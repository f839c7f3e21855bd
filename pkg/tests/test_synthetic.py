"""Bundled synthetic corpus integrity and label realizability."""

from sentipipe.lexicon import LexiconScorer, assign_label, label_corpus, polarity_score
from sentipipe.synthetic import (
    DEFAULT_SEED,
    DEFAULT_SIZE,
    generate_corpus,
    load_bundled_corpus,
)
from sentipipe.textprep import DEFAULT_CLEANING, preprocess


def test_bundled_file_matches_generator(bundled_lexicon, stopwords):
    bundled = load_bundled_corpus()
    regenerated = generate_corpus(DEFAULT_SIZE, DEFAULT_SEED, bundled_lexicon, stopwords)
    assert bundled.records == regenerated.records


def test_bundled_shape(stopwords):
    corpus = load_bundled_corpus()
    assert len(corpus) == 2000
    assert len({r.id for r in corpus}) == 2000
    assert {r.country for r in corpus} == {"UK", "India"}
    assert all(r.text.strip() for r in corpus)


def test_labels_come_from_the_lexicon_pipeline(bundled_lexicon, stopwords):
    corpus = load_bundled_corpus()
    result = label_corpus(
        corpus, LexiconScorer(bundled_lexicon), stopwords=stopwords
    )
    # rescoring each document independently reproduces every label
    for record, document in zip(corpus, result.documents):
        tokens = preprocess(record.text, DEFAULT_CLEANING, stopwords)
        expected = int(assign_label(polarity_score(tokens, bundled_lexicon)))
        assert document.label == expected
    # both classes well represented
    assert 700 <= result.n_negative <= 900
    assert result.n_positive + result.n_negative == 2000


def test_generator_seed_sensitivity(bundled_lexicon, stopwords):
    small_a = generate_corpus(50, seed=1, lexicon=bundled_lexicon, stopwords=stopwords)
    small_b = generate_corpus(50, seed=2, lexicon=bundled_lexicon, stopwords=stopwords)
    assert [r.text for r in small_a] != [r.text for r in small_b]
