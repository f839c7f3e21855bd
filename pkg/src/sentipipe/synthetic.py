"""Seeded synthetic tweet corpus with lexicon-planted labels.

Every document is assembled from three pools and then decorated with the
noise the cleaning stages exist to remove (mentions, URLs, hashtag marks,
digits, random casing, punctuation):

* filler: neutral domain words whose stems hit neither lexicon side,
* anchor signal words: a handful of frequent sentiment words,
* pool signal words: a broad set of rarer sentiment words.

Signal words are chosen from the bundled lexicon restricted to stemming
fixed points, so they survive preprocessing and still match the lexicon;
each document is verified through the real pipeline (preprocess, score,
threshold) and nudged until its realized label matches the intended one.
A slice of negatives carries no signal words at all (score 0), which keeps
the labeling rule's "no evidence means negative" branch populated.

Everything is a pure function of the seed; the bundled CSV under
``sentipipe/data`` is the DEFAULT_SEED output frozen at build time.
"""

from __future__ import annotations

import datetime
import io
from importlib import resources

import numpy as np

from .corpus import Corpus, TweetRecord, ingest_csv
from .lexicon import OpinionLexicon, assign_label, load_bundled_lexicon, polarity_score
from .porter import stem
from .textprep import DEFAULT_CLEANING, bundled_stopwords, preprocess

DEFAULT_SEED = 73
DEFAULT_SIZE = 2000

BUNDLED_CORPUS_FILE = "synthetic_tweets.csv"

FILLER_WORDS = (
    "electricity energy bill bills price prices tariff tariffs meter unit units "
    "cost costs month monthly winter heating household home kitchen market power "
    "gas coal grid supplier company provider customer consumer payment invoice "
    "account contract plan region street city town office work morning evening "
    "weekend january october network station report notice letter email news "
    "update reading usage level rate change percent figure amount total balance "
    "moment people family neighbours kettle shower lights thermostat radiator"
).split()

ANCHOR_POSITIVE = ("good", "great", "cheap", "fair", "calm", "safe")
ANCHOR_NEGATIVE = ("bad", "poor", "wrong", "harsh", "grim", "bleak")

# Document kinds: (name, corpus fraction, intended label). The two *_boundary
# kinds carry the same signal content (one positive anchor, twice) and differ
# only in filler length, so the label hinges on the score's length
# normalization - the part of the rule raw-count models cannot represent.
_MIX = (
    ("pos_strong", 0.32, 1),
    ("pos_weak", 0.14, 1),
    ("pos_boundary", 0.12, 1),
    ("neg_strong", 0.16, 0),
    ("neg_weak", 0.08, 0),
    ("neg_boundary", 0.10, 0),
    ("neg_neutral", 0.08, 0),
)


def _signal_pools(lexicon: OpinionLexicon, stopwords: frozenset[str], rng):
    """Stem-fixed lexicon words usable as planted signal, anchors excluded."""
    fixed_pos = sorted(
        w for w in lexicon.positive
        if stem(w) == w and w not in stopwords and w not in ANCHOR_POSITIVE
    )
    fixed_neg = sorted(
        w for w in lexicon.negative
        if stem(w) == w and w not in stopwords and w not in ANCHOR_NEGATIVE
    )
    pool_pos = [fixed_pos[i] for i in rng.permutation(len(fixed_pos))[:40]]
    pool_neg = [fixed_neg[i] for i in rng.permutation(len(fixed_neg))[:40]]
    return pool_pos, pool_neg


def _check_filler(lexicon: OpinionLexicon, stopwords: frozenset[str]) -> None:
    for word in FILLER_WORDS:
        if word in stopwords:
            raise ValueError(f"filler word {word!r} is a stopword")
        stemmed = stem(word)
        if stemmed in lexicon.positive or stemmed in lexicon.negative:
            raise ValueError(f"filler word {word!r} stems into the lexicon")


def _pick(rng, pool, count):
    return [pool[int(i)] for i in rng.integers(0, len(pool), count)]


def _signal_words(rng, anchors, pool, count):
    words = []
    for _ in range(count):
        if rng.random() < 0.55:
            words.append(anchors[int(rng.integers(0, len(anchors)))])
        else:
            words.append(pool[int(rng.integers(0, len(pool)))])
    return words


def _decorate(rng, words: list[str]) -> str:
    """Shuffle and dress the word list up as a raw tweet."""
    tokens = [words[int(i)] for i in rng.permutation(len(words))]
    out = []
    for token in tokens:
        style = rng.random()
        if style < 0.06:
            out.append("#" + token)
        elif style < 0.10:
            out.append(token.upper())
        elif style < 0.14:
            out.append(token.capitalize())
        elif style < 0.18:
            out.append(token + "!!")
        else:
            out.append(token)
    r = rng.random()
    if r < 0.20:
        out.insert(0, f"@user{int(rng.integers(1, 999))}")
    elif r < 0.35:
        out.append(f"https://t.co/{int(rng.integers(1000, 9999))}x")
    elif r < 0.45:
        out.append(f"{int(rng.integers(10, 400))}%")
    return " ".join(out)


def generate_corpus(
    n_docs: int = DEFAULT_SIZE,
    seed: int = DEFAULT_SEED,
    lexicon: OpinionLexicon | None = None,
    stopwords: frozenset[str] | None = None,
) -> Corpus:
    """Build the deterministic synthetic corpus for the given seed."""
    lexicon = lexicon if lexicon is not None else load_bundled_lexicon()
    stopwords = stopwords if stopwords is not None else bundled_stopwords()
    _check_filler(lexicon, stopwords)
    rng = np.random.default_rng(seed)
    pool_pos, pool_neg = _signal_pools(lexicon, stopwords, rng)

    kinds = [name for name, fraction, _ in _MIX for _ in range(int(round(fraction * n_docs)))]
    kinds = kinds[:n_docs]
    while len(kinds) < n_docs:
        kinds.append(_MIX[0][0])
    kinds = [kinds[int(j)] for j in rng.permutation(len(kinds))]
    kind_label = {name: label for name, _, label in _MIX}

    base_date = datetime.date(2022, 3, 1)
    records = []
    for i in range(n_docs):
        kind = kinds[i]
        intended = kind_label[kind]
        if kind == "pos_boundary":
            # One anchor twice over short filler: score = 2/len lands in
            # [0.118, 0.133], just above the 0.1 threshold.
            anchor = ANCHOR_POSITIVE[int(rng.integers(0, len(ANCHOR_POSITIVE)))]
            words = _pick(rng, FILLER_WORDS, int(rng.integers(13, 16))) + [anchor, anchor]
        elif kind == "neg_boundary":
            # Same signal content over long filler: score = 2/len lands in
            # [0.069, 0.087], just below the threshold.
            anchor = ANCHOR_POSITIVE[int(rng.integers(0, len(ANCHOR_POSITIVE)))]
            words = _pick(rng, FILLER_WORDS, int(rng.integers(21, 28))) + [anchor, anchor]
        else:
            filler = _pick(rng, FILLER_WORDS, int(rng.integers(6, 17)))
            if kind == "pos_strong":
                words = filler + _signal_words(rng, ANCHOR_POSITIVE, pool_pos, int(rng.integers(3, 5)))
            elif kind == "pos_weak":
                words = filler + _signal_words(rng, ANCHOR_POSITIVE, pool_pos, 2)
                if rng.random() < 0.5:
                    words += _signal_words(rng, ANCHOR_NEGATIVE, pool_neg, 1)
            elif kind == "neg_strong":
                words = filler + _signal_words(rng, ANCHOR_NEGATIVE, pool_neg, int(rng.integers(3, 5)))
            elif kind == "neg_weak":
                words = filler + _signal_words(rng, ANCHOR_NEGATIVE, pool_neg, 2)
                words += _signal_words(rng, ANCHOR_POSITIVE, pool_pos, 1)
            else:
                words = filler
            if kind != "neg_neutral" and rng.random() < 0.3:
                burst = filler[int(rng.integers(0, len(filler)))]
                words += [burst] * int(rng.integers(1, 3))

        anchors = ANCHOR_POSITIVE if intended == 1 else ANCHOR_NEGATIVE
        pool = pool_pos if intended == 1 else pool_neg
        for _ in range(12):
            raw = _decorate(rng, words)
            tokens = preprocess(raw, DEFAULT_CLEANING, stopwords)
            realized = int(assign_label(polarity_score(tokens, lexicon)))
            if realized == intended:
                break
            words = words + _signal_words(rng, anchors, pool, 1)
        else:
            raise AssertionError(f"could not realize label {intended} for doc {i}")

        records.append(
            TweetRecord(
                id=f"synth-{i + 1:04d}",
                text=raw,
                author=f"user{int(rng.integers(1, 400))}",
                created_at=(base_date + datetime.timedelta(days=i % 180)).isoformat(),
                country="UK" if rng.random() < 0.6 else "India",
            )
        )
    return Corpus(tuple(records), source_name=f"synthetic(seed={seed},n={n_docs})")


def load_bundled_corpus() -> Corpus:
    """The frozen DEFAULT_SEED corpus shipped as package data."""
    raw = resources.files("sentipipe.data").joinpath(BUNDLED_CORPUS_FILE).read_bytes()
    result = ingest_csv(io.BytesIO(raw), source_name="bundled-synthetic")
    return result.corpus


def benchmark_specs(seed: int = 101):
    """Model settings tuned for the bundled corpus benchmark.

    The forest gets wide feature subsets and enough trees to pick up the
    boundary documents; the logistic learner needs the large step size to
    calibrate within its epoch budget on these small TF-IDF values.
    """
    from .classifiers import ModelSpec

    return {
        "nb": ModelSpec(kind="nb", alpha=1.0),
        "dt": ModelSpec(kind="dt", max_depth=None, min_samples_leaf=1),
        "rf": ModelSpec(
            kind="rf",
            n_trees=40,
            features_per_split=60,
            max_depth=16,
            min_samples_leaf=1,
            seed=seed,
        ),
        "lr": ModelSpec(kind="lr", learning_rate=5.0, epochs=500, l2=1e-4, seed=seed),
    }
