"""Opinion-word lexicon loading, polarity scoring, and threshold labeling.

A document's score is (positive hits - negative hits) / max(1, token count),
so it always lies in [-1, 1] regardless of document length. Labels are binary:
a score greater than or equal to the threshold (default 0.1) is Positive,
anything below it - including every score in (0, 0.1) - is Negative.

Scoring matches exact preprocessed tokens against the lexicon; a different
scorer (e.g. a rule-based engine) can be plugged in anywhere a callable
``tokens -> SentimentScore`` is accepted.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from enum import IntEnum
from importlib import resources
from typing import Callable, Sequence

from .corpus import Corpus, LabeledDocument
from .errors import ConfigurationError, DataError
from .textprep import CleaningConfig, DEFAULT_CLEANING, preprocess


class SentimentLabel(IntEnum):
    NEGATIVE = 0
    POSITIVE = 1


@dataclass(frozen=True)
class OpinionLexicon:
    """Disjoint positive/negative word sets; conflicts are excluded from both."""

    positive: frozenset[str]
    negative: frozenset[str]
    conflicts: tuple[str, ...] = ()

    def __post_init__(self):
        overlap = self.positive & self.negative
        if overlap:
            raise ConfigurationError(
                f"lexicon word sets must be disjoint; overlap: {sorted(overlap)[:5]}"
            )

    def __len__(self) -> int:
        return len(self.positive) + len(self.negative)


@dataclass(frozen=True)
class SentimentScore:
    """Lexicon hit counts plus the normalized polarity score."""

    pos_count: int
    neg_count: int
    token_count: int
    score: float

    @classmethod
    def from_counts(cls, pos_count: int, neg_count: int, token_count: int) -> "SentimentScore":
        return cls(
            pos_count=pos_count,
            neg_count=neg_count,
            token_count=token_count,
            score=(pos_count - neg_count) / max(1, token_count),
        )


Scorer = Callable[[Sequence[str]], SentimentScore]


def _read_words(source) -> list[str]:
    if hasattr(source, "read"):
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8", "replace")
    else:
        try:
            with open(source, encoding="utf-8", errors="replace") as fh:
                text = fh.read()
        except OSError as exc:
            raise DataError(f"cannot read lexicon file: {exc}") from exc
    words = []
    for line in text.splitlines():
        word = line.strip()
        if not word or word.startswith(";"):
            continue
        words.append(word.lower())
    return words


def load_lexicon(positive_source, negative_source) -> OpinionLexicon:
    """Load word-per-line lexicon files (``;`` lines are comments).

    Words are lowercased and deduplicated. A word appearing in both lists is
    excluded from both and reported via ``conflicts``.
    """
    positive = set(_read_words(positive_source))
    negative = set(_read_words(negative_source))
    if not positive and not negative:
        raise ConfigurationError("both lexicon word lists are empty")
    conflicts = positive & negative
    return OpinionLexicon(
        positive=frozenset(positive - conflicts),
        negative=frozenset(negative - conflicts),
        conflicts=tuple(sorted(conflicts)),
    )


def load_bundled_lexicon() -> OpinionLexicon:
    """The general-purpose English opinion lexicon shipped with the package."""
    data = resources.files("sentipipe.data")
    return load_lexicon(
        io.StringIO(data.joinpath("positive-words.txt").read_text("utf-8")),
        io.StringIO(data.joinpath("negative-words.txt").read_text("utf-8")),
    )


def polarity_score(tokens: Sequence[str], lexicon: OpinionLexicon) -> SentimentScore:
    """Count lexicon hits (with multiplicity) over preprocessed tokens."""
    pos = sum(1 for t in tokens if t in lexicon.positive)
    neg = sum(1 for t in tokens if t in lexicon.negative)
    return SentimentScore.from_counts(pos, neg, len(tokens))


def label_for_value(value: float, threshold: float = 0.1) -> SentimentLabel:
    """Positive iff ``value >= threshold``."""
    return SentimentLabel.POSITIVE if value >= threshold else SentimentLabel.NEGATIVE


def assign_label(score: SentimentScore, threshold: float = 0.1) -> SentimentLabel:
    return label_for_value(score.score, threshold)


class LexiconScorer:
    """Default scorer: exact lexicon matching over preprocessed tokens."""

    def __init__(self, lexicon: OpinionLexicon):
        self.lexicon = lexicon

    def __call__(self, tokens: Sequence[str]) -> SentimentScore:
        return polarity_score(tokens, self.lexicon)


@dataclass(frozen=True)
class LabelingResult:
    documents: tuple[LabeledDocument, ...]
    n_positive: int
    n_negative: int


def label_corpus(
    corpus: Corpus,
    scorer: Scorer,
    cleaning: CleaningConfig = DEFAULT_CLEANING,
    stopwords: frozenset[str] = frozenset(),
    threshold: float = 0.1,
) -> LabelingResult:
    """Preprocess, score, and label every record of a corpus."""
    if len(corpus) == 0:
        raise DataError("cannot label an empty corpus")
    documents = []
    n_positive = 0
    for record in corpus:
        tokens = preprocess(record.text, cleaning, stopwords)
        score = scorer(tokens)
        label = label_for_value(score.score, threshold)
        n_positive += int(label)
        documents.append(
            LabeledDocument(
                id=record.id,
                text=record.text,
                pos_count=score.pos_count,
                neg_count=score.neg_count,
                score=score.score,
                label=int(label),
                tokens=tokens,
            )
        )
    return LabelingResult(
        documents=tuple(documents),
        n_positive=n_positive,
        n_negative=len(documents) - n_positive,
    )
