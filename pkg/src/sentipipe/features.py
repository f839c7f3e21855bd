"""Vocabulary construction and TF / IDF / TF-IDF feature extraction.

Documents are token sequences; terms are the tokens themselves plus any
configured n-gram windows (tokens joined by single spaces). Vectors are
sparse (index, value) pairs sorted by index with no explicit zeros.

Term frequency is occurrence count over the document's total term count, so
out-of-vocabulary terms still contribute to the denominator. The IDF weight
of a term is a function of n_docs/df selected by ``idf_mode``: natural log
(the default), base-10 log, or the raw ratio itself.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigurationError, DataError, SchemaError

SparseVector = tuple[tuple[int, float], ...]

IDF_NATURAL_LOG = "natural_log"
IDF_LOG10 = "log10"
IDF_RAW_RATIO = "raw_ratio"

_IDF_FUNCTIONS = {
    IDF_NATURAL_LOG: math.log,
    IDF_LOG10: math.log10,
    IDF_RAW_RATIO: lambda ratio: float(ratio),
}

_MODEL_FORMAT_TAG = "sentipipe-tfidf/1"


@dataclass(frozen=True)
class NgramConfig:
    """Window sizes and the document-frequency floor for vocabulary terms."""

    n_min: int = 1
    n_max: int = 1
    min_df: int = 1

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max <= 3:
            raise ConfigurationError(
                f"need 1 <= n_min <= n_max <= 3, got ({self.n_min}, {self.n_max})"
            )
        if self.min_df < 1:
            raise ConfigurationError(f"min_df must be >= 1, got {self.min_df}")


@dataclass(frozen=True)
class Vocabulary:
    """Term-to-index map with per-term document frequencies."""

    index: dict[str, int]
    df: tuple[int, ...]
    n_docs: int
    ngram: NgramConfig = NgramConfig()

    @property
    def size(self) -> int:
        return len(self.index)

    def terms(self) -> tuple[str, ...]:
        """Terms in index order."""
        ordered = sorted(self.index.items(), key=lambda kv: kv[1])
        return tuple(term for term, _ in ordered)


@dataclass(frozen=True)
class TfidfModel:
    vocabulary: Vocabulary
    idf: tuple[float, ...]
    idf_mode: str = IDF_NATURAL_LOG


@dataclass(frozen=True)
class FeatureMatrix:
    """Sparse row-major matrix; ``rows[i]`` aligns with input document i."""

    rows: tuple[SparseVector, ...]
    n_columns: int

    def __len__(self) -> int:
        return len(self.rows)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((len(self.rows), self.n_columns))
        for i, row in enumerate(self.rows):
            for j, value in row:
                dense[i, j] = value
        return dense

    def validate(self) -> None:
        for row in self.rows:
            previous = -1
            for j, value in row:
                if not previous < j < self.n_columns:
                    raise DataError(
                        f"row index {j} out of order or >= {self.n_columns}"
                    )
                if value == 0.0:
                    raise DataError("sparse rows must not store explicit zeros")
                previous = j


def extract_ngrams(tokens: Sequence[str], config: NgramConfig) -> list[str]:
    """All contiguous n-token windows for each n in [n_min, n_max], in order."""
    terms = []
    for n in range(config.n_min, config.n_max + 1):
        for start in range(len(tokens) - n + 1):
            terms.append(" ".join(tokens[start : start + n]))
    return terms


def build_vocabulary(
    docs: Sequence[Sequence[str]], config: NgramConfig = NgramConfig()
) -> Vocabulary:
    """Index terms with document frequency >= min_df in first-occurrence order."""
    if not docs:
        raise DataError("cannot build a vocabulary from zero documents")
    order: dict[str, int] = {}
    df: dict[str, int] = {}
    for tokens in docs:
        seen_here = set()
        for term in extract_ngrams(tokens, config):
            if term not in order:
                order[term] = len(order)
            if term not in seen_here:
                seen_here.add(term)
                df[term] = df.get(term, 0) + 1
    kept = [term for term in order if df[term] >= config.min_df]
    if not kept:
        raise ConfigurationError(
            f"no term reaches min_df={config.min_df}; vocabulary would be empty"
        )
    return Vocabulary(
        index={term: i for i, term in enumerate(kept)},
        df=tuple(df[term] for term in kept),
        n_docs=len(docs),
        ngram=config,
    )


def _term_counts(tokens: Sequence[str], vocab: Vocabulary) -> tuple[dict[int, int], int]:
    terms = extract_ngrams(tokens, vocab.ngram)
    counts: dict[int, int] = {}
    for term in terms:
        j = vocab.index.get(term)
        if j is not None:
            counts[j] = counts.get(j, 0) + 1
    return counts, len(terms)


def term_frequency(tokens: Sequence[str], vocab: Vocabulary) -> SparseVector:
    """Per-term occurrence fraction; empty documents give an empty vector."""
    counts, total = _term_counts(tokens, vocab)
    if total == 0:
        return ()
    return tuple((j, count / total) for j, count in sorted(counts.items()))


def count_vector(tokens: Sequence[str], vocab: Vocabulary) -> SparseVector:
    """Raw in-vocabulary term counts (the representation Naive Bayes consumes)."""
    counts, _ = _term_counts(tokens, vocab)
    return tuple((j, float(count)) for j, count in sorted(counts.items()))


def count_transform(docs: Sequence[Sequence[str]], vocab: Vocabulary) -> FeatureMatrix:
    return FeatureMatrix(
        rows=tuple(count_vector(tokens, vocab) for tokens in docs),
        n_columns=vocab.size,
    )


def fit_idf(vocab: Vocabulary, idf_mode: str = IDF_NATURAL_LOG) -> TfidfModel:
    """Compute per-term IDF weights from the vocabulary's document frequencies."""
    if idf_mode not in _IDF_FUNCTIONS:
        raise ConfigurationError(
            f"idf_mode must be one of {sorted(_IDF_FUNCTIONS)}, got {idf_mode!r}"
        )
    transform = _IDF_FUNCTIONS[idf_mode]
    idf = tuple(transform(vocab.n_docs / df) for df in vocab.df)
    return TfidfModel(vocabulary=vocab, idf=idf, idf_mode=idf_mode)


def tfidf_transform(
    docs: Sequence[Sequence[str]], model: TfidfModel
) -> FeatureMatrix:
    """Elementwise tf * idf per document; rows align with ``docs``."""
    rows = []
    for tokens in docs:
        tf_row = term_frequency(tokens, model.vocabulary)
        rows.append(
            tuple((j, tf * model.idf[j]) for j, tf in tf_row if tf * model.idf[j] != 0.0)
        )
    return FeatureMatrix(rows=tuple(rows), n_columns=model.vocabulary.size)


def save_tfidf_model(model: TfidfModel, sink) -> None:
    """Versioned text serialization: header, config line, then term rows."""
    own = isinstance(sink, str)
    fh = open(sink, "w", encoding="utf-8", newline="") if own else sink
    try:
        vocab = model.vocabulary
        fh.write(_MODEL_FORMAT_TAG + "\n")
        fh.write(
            f"V={vocab.size} n_docs={vocab.n_docs} idf_mode={model.idf_mode} "
            f"n_min={vocab.ngram.n_min} n_max={vocab.ngram.n_max} "
            f"min_df={vocab.ngram.min_df}\n"
        )
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["term", "index", "df", "idf"])
        for term, j in sorted(vocab.index.items(), key=lambda kv: kv[1]):
            writer.writerow([term, j, vocab.df[j], repr(model.idf[j])])
    finally:
        if own:
            fh.close()


def load_tfidf_model(source) -> TfidfModel:
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source.read()
    lines = text.splitlines()
    if not lines or lines[0] != _MODEL_FORMAT_TAG:
        raise SchemaError(f"not a {_MODEL_FORMAT_TAG} file")
    header = dict(part.split("=", 1) for part in lines[1].split())
    reader = csv.reader(io.StringIO("\n".join(lines[2:])))
    columns = next(reader)
    if columns != ["term", "index", "df", "idf"]:
        raise SchemaError(f"unexpected column header {columns}")
    entries = [(row[0], int(row[1]), int(row[2]), float(row[3])) for row in reader]
    entries.sort(key=lambda e: e[1])
    size = int(header["V"])
    if [e[1] for e in entries] != list(range(size)):
        raise DataError("term indices are not contiguous from 0")
    vocab = Vocabulary(
        index={term: j for term, j, _, _ in entries},
        df=tuple(df for _, _, df, _ in entries),
        n_docs=int(header["n_docs"]),
        ngram=NgramConfig(
            n_min=int(header["n_min"]),
            n_max=int(header["n_max"]),
            min_df=int(header["min_df"]),
        ),
    )
    return TfidfModel(
        vocabulary=vocab,
        idf=tuple(idf for _, _, _, idf in entries),
        idf_mode=header["idf_mode"],
    )
