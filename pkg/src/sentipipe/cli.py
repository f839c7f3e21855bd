"""Command-line pipeline: ingest -> label -> featurize -> train, plus the
evaluate / compare-features / report commands.

Each subcommand reads its predecessor's artifact from the output directory
and writes its own; a missing predecessor exits with code 1 and names the
subcommand to run first. Artifacts are written atomically (temp file +
rename) and are byte-deterministic for a fixed config and seed, regardless
of ``--workers``.

Exit codes: 0 success, 1 usage, 2 data error, 3 numeric/training error.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import os
import sys
import tempfile

from . import __version__
from .classifiers import fit_model, save_model
from .config import BUNDLED, DEFAULTS, PipelineConfig
from .corpus import (
    filter_by_country,
    ingest_csv,
    ingest_labeled,
    persist_corpus,
    persist_labeled,
)
from .errors import ConfigurationError, DataError, SchemaError, TrainingError
from .evaluation import (
    cross_validate,
    report_to_csv,
    report_to_text,
    roc_to_csv,
    round2,
)
from .features import (
    build_vocabulary,
    count_transform,
    fit_idf,
    load_tfidf_model,
    save_tfidf_model,
    tfidf_transform,
)
from .lexicon import LexiconScorer, label_corpus, load_bundled_lexicon, load_lexicon
from .pipeline import build_train_test_matrices, holdout_evaluate, tokens_for_documents
from .reporting import (
    frequency_to_csv,
    render_roc_svg,
    render_wordcloud_svg,
    word_frequency_report,
)
from .textprep import bundled_stopwords, load_stopwords

SUBCOMMANDS = (
    "ingest",
    "label",
    "featurize",
    "train",
    "evaluate",
    "compare-features",
    "report",
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TRAINING = 3

# artifact file -> subcommand that produces it
_ARTIFACTS = {
    "corpus.csv": "ingest",
    "labeled.csv": "label",
    "tfidf_model.txt": "featurize",
}


class UsageError(Exception):
    pass


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(path) or "."
    fd, temp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=False)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise


def _artifact(config: PipelineConfig, name: str) -> str:
    path = os.path.join(config.out_dir, name)
    if not os.path.exists(path):
        producer = _ARTIFACTS[name]
        raise UsageError(
            f"missing {name} in {config.out_dir!r}: run the `{producer}` subcommand first"
        )
    return path


def _stopwords(config: PipelineConfig) -> frozenset[str]:
    path = config.get("stopwords.path")
    return bundled_stopwords() if path == BUNDLED else load_stopwords(path)


def _lexicon(config: PipelineConfig):
    positive = config.get("lexicon.positive")
    negative = config.get("lexicon.negative")
    if positive == BUNDLED and negative == BUNDLED:
        return load_bundled_lexicon()
    return load_lexicon(positive, negative)


def _labeled_tokens(config: PipelineConfig):
    """Load labeled.csv and re-tokenize with the configured pipeline."""
    docs = ingest_labeled(_artifact(config, "labeled.csv"))
    if not docs:
        raise DataError("labeled corpus is empty")
    tokens = tokens_for_documents(docs, config.cleaning_config(), _stopwords(config))
    labels = [doc.label for doc in docs]
    if len(set(labels)) < 2:
        raise DataError("labeled corpus contains a single class")
    return docs, tokens, labels


def cmd_ingest(config: PipelineConfig) -> int:
    source = config.get("corpus.path")
    if not source:
        raise UsageError("corpus.path is required for `ingest`")
    result = ingest_csv(
        source,
        schema=config.corpus_schema(),
        strict=config.get_bool("corpus.strict"),
        source_name=os.path.basename(source),
    )
    corpus = result.corpus
    country = config.get("corpus.country")
    if country != "all":
        corpus = filter_by_country(corpus, country)
    if len(corpus) == 0:
        raise DataError("no records left after ingestion/filtering")
    os.makedirs(config.out_dir, exist_ok=True)
    buffer = io.StringIO()
    persist_corpus(corpus, buffer)
    write_atomic(os.path.join(config.out_dir, "corpus.csv"), buffer.getvalue())
    print(
        f"ingest: accepted={result.accepted} dropped_empty={result.dropped_empty_text} "
        f"dropped_duplicate={result.dropped_duplicate_id} "
        f"replaced_chars={result.replaced_chars} row_errors={len(result.row_errors)} "
        f"kept={len(corpus)}"
    )
    return EXIT_OK


def cmd_label(config: PipelineConfig) -> int:
    source = _artifact(config, "corpus.csv")
    corpus = ingest_csv(source, source_name="corpus.csv").corpus
    result = label_corpus(
        corpus,
        LexiconScorer(_lexicon(config)),
        cleaning=config.cleaning_config(),
        stopwords=_stopwords(config),
        threshold=config.get_float("lexicon.threshold"),
    )
    buffer = io.StringIO()
    persist_labeled(result.documents, buffer)
    write_atomic(os.path.join(config.out_dir, "labeled.csv"), buffer.getvalue())
    print(f"label: positive={result.n_positive} negative={result.n_negative}")
    return EXIT_OK


def cmd_featurize(config: PipelineConfig) -> int:
    _, tokens, _ = _labeled_tokens(config)
    vocab = build_vocabulary(tokens, config.ngram_config())
    model = fit_idf(vocab, config.idf_mode())
    buffer = io.StringIO()
    save_tfidf_model(model, buffer)
    write_atomic(os.path.join(config.out_dir, "tfidf_model.txt"), buffer.getvalue())
    print(f"featurize: V={vocab.size} n_docs={vocab.n_docs} idf_mode={model.idf_mode}")
    return EXIT_OK


def cmd_train(config: PipelineConfig) -> int:
    kinds = config.model_kinds()
    if len(kinds) != 1:
        raise UsageError("`train` needs a single model.kind (not 'all')")
    kind = kinds[0]
    _, tokens, labels = _labeled_tokens(config)
    tfidf = load_tfidf_model(_artifact(config, "tfidf_model.txt"))
    spec = config.model_spec(kind)
    if spec.uses_counts:
        X = count_transform(tokens, tfidf.vocabulary)
    else:
        X = tfidf_transform(tokens, tfidf)
    model = fit_model(spec, X, labels, workers=config.workers)
    buffer = io.StringIO()
    save_model(model, buffer)
    write_atomic(os.path.join(config.out_dir, f"model_{kind}.json"), buffer.getvalue())
    print(f"train: kind={kind} V={X.n_columns} n={len(labels)}")
    return EXIT_OK


def cmd_evaluate(config: PipelineConfig) -> int:
    _, tokens, labels = _labeled_tokens(config)
    curves = []
    for kind in config.model_kinds():
        result = cross_validate(
            tokens,
            labels,
            ngram=config.ngram_config(),
            model_spec=config.model_spec(kind),
            cv=config.cv_config(),
            idf_mode=config.idf_mode(),
            workers=config.workers,
        )
        write_atomic(
            os.path.join(config.out_dir, f"report_{kind}.csv"),
            report_to_csv(result.aggregate),
        )
        write_atomic(
            os.path.join(config.out_dir, f"report_{kind}.txt"),
            report_to_text(result.aggregate),
        )
        write_atomic(
            os.path.join(config.out_dir, f"roc_{kind}.csv"),
            roc_to_csv(result.aggregate.roc),
        )
        fold_lines = ["fold,accuracy,macro_f1,auc,warning"]
        for fold in result.folds:
            auc = repr(fold.roc.auc) if fold.roc is not None else ""
            fold_lines.append(
                f"{fold.fold_index},{repr(fold.report.accuracy)},"
                f"{repr(fold.report.macro_f1)},{auc},{fold.warning or ''}"
            )
        write_atomic(
            os.path.join(config.out_dir, f"folds_{kind}.csv"),
            "\n".join(fold_lines) + "\n",
        )
        curves.append((kind, result.aggregate.roc))
        print(
            f"evaluate: kind={kind} accuracy={round2(result.aggregate.accuracy)} "
            f"auc={result.aggregate.roc.auc:.4f}"
        )
    write_atomic(os.path.join(config.out_dir, "roc.svg"), render_roc_svg(curves))
    return EXIT_OK


def cmd_compare_features(config: PipelineConfig) -> int:
    kinds = config.model_kinds()
    if len(kinds) != 1:
        raise UsageError("`compare-features` needs a single model.kind (not 'all')")
    kind = kinds[0]
    _, tokens, labels = _labeled_tokens(config)
    spec = config.model_spec(kind)
    split = config.split_spec()
    rows = ["feature_set,n_min,n_max,accuracy"]
    summary = []
    for name, ngram in (
        ("tfidf-word", config.ngram_config()),
        ("tfidf-ngram", config.compare_ngram_config()),
    ):
        outcome = holdout_evaluate(
            tokens, labels, [spec], split,
            ngram=ngram, idf_mode=config.idf_mode(), workers=config.workers,
        )[kind]
        rows.append(f"{name},{ngram.n_min},{ngram.n_max},{repr(outcome.accuracy)}")
        summary.append(f"{name}={round2(outcome.accuracy)}")
    write_atomic(
        os.path.join(config.out_dir, "feature_comparison.csv"), "\n".join(rows) + "\n"
    )
    print(f"compare-features: kind={kind} " + " ".join(summary))
    return EXIT_OK


def cmd_report(config: PipelineConfig) -> int:
    docs, tokens, _ = _labeled_tokens(config)
    docs = [dataclasses.replace(d, tokens=t) for d, t in zip(docs, tokens)]
    top_k = config.get_int("report.top_k")
    for label, name in ((1, "positive"), (0, "negative")):
        report = word_frequency_report(docs, label, top_k)
        write_atomic(
            os.path.join(config.out_dir, f"freq_{name}.csv"), frequency_to_csv(report)
        )
        if report.entries:
            write_atomic(
                os.path.join(config.out_dir, f"wordcloud_{name}.svg"),
                render_wordcloud_svg(report),
            )
        print(f"report: label={name} distinct_tokens={len(report.entries)}")
    return EXIT_OK


_COMMANDS = {
    "ingest": cmd_ingest,
    "label": cmd_label,
    "featurize": cmd_featurize,
    "train": cmd_train,
    "evaluate": cmd_evaluate,
    "compare-features": cmd_compare_features,
    "report": cmd_report,
}


def _parse_overrides(tokens: list[str]) -> dict[str, str]:
    """Turn trailing ``--key value`` pairs into config overrides."""
    overrides: dict[str, str] = {}
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if not token.startswith("--"):
            raise UsageError(f"unexpected argument {token!r}")
        key = token[2:]
        if key not in DEFAULTS:
            raise UsageError(f"unknown config key --{key}")
        if i + 1 >= len(tokens):
            raise UsageError(f"--{key} needs a value")
        overrides[key] = tokens[i + 1]
        i += 2
    return overrides


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="sentipipe",
        description="Tweet sentiment pipeline: lexicon labeling, TF-IDF features, "
        "four classifiers, k-fold evaluation, and reports.",
        epilog="Any config key can be overridden with --<key> <value>, "
        "e.g. --cv.k 10 --model.kind nb",
    )
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("--config", help="path to a key=value config file")
    parser.add_argument("--workers", type=int, help="parallel workers (default 1)")
    parser.add_argument("--seed", type=int, help="master seed for every stage")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        overrides = _parse_overrides(extra)
        if args.workers is not None:
            overrides["workers"] = str(args.workers)
        if args.seed is not None:
            overrides["seed"] = str(args.seed)
        config = PipelineConfig.load(args.config, overrides)
        return _COMMANDS[args.subcommand](config)
    except UsageError as exc:
        print(f"sentipipe: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigurationError as exc:
        print(f"sentipipe: configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, SchemaError) as exc:
        print(f"sentipipe: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (TrainingError, FloatingPointError, OverflowError, ZeroDivisionError) as exc:
        print(f"sentipipe: training error: {exc}", file=sys.stderr)
        return EXIT_TRAINING


if __name__ == "__main__":
    sys.exit(main())
