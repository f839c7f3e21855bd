"""Tweet sentiment pipeline: ingestion, cleaning, lexicon labeling, TF-IDF
features, four from-scratch classifiers, k-fold evaluation, and reporting.

The usual flow mirrors the CLI stages:

    corpus  = sentipipe.ingest_csv("tweets.csv").corpus
    labeled = sentipipe.label_corpus(corpus, sentipipe.LexiconScorer(
        sentipipe.load_bundled_lexicon()), stopwords=sentipipe.bundled_stopwords())
    result  = sentipipe.cross_validate(
        [d.tokens for d in labeled.documents],
        [d.label for d in labeled.documents],
        sentipipe.NgramConfig(min_df=2),
        sentipipe.ModelSpec(kind="rf"),
        sentipipe.CvConfig(k=5, seed=42),
    )
"""

__version__ = "0.1.0"

from .classifiers import (
    ModelSpec,
    fit_model,
    load_model,
    predict_label,
    predict_score,
    save_model,
)
from .corpus import (
    Corpus,
    LabeledDocument,
    SplitSpec,
    TweetRecord,
    filter_by_country,
    ingest_csv,
    ingest_labeled,
    persist_corpus,
    persist_labeled,
    train_test_split,
)
from .evaluation import (
    ClassificationReport,
    ConfusionMatrix,
    CvConfig,
    RocCurve,
    classification_report,
    confusion,
    cross_validate,
    kfold_partition,
    metrics,
    roc_curve,
)
from .features import (
    NgramConfig,
    TfidfModel,
    Vocabulary,
    build_vocabulary,
    extract_ngrams,
    fit_idf,
    term_frequency,
    tfidf_transform,
)
from .lexicon import (
    LexiconScorer,
    OpinionLexicon,
    SentimentLabel,
    SentimentScore,
    assign_label,
    label_corpus,
    load_bundled_lexicon,
    load_lexicon,
    polarity_score,
)
from .porter import stem
from .textprep import (
    CleaningConfig,
    bundled_stopwords,
    clean_text,
    load_stopwords,
    preprocess,
    remove_stopwords,
    tokenize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
