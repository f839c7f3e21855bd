"""Subcommand chain, exit codes, artifacts, and determinism."""

import csv
import os

import pytest

from sentipipe.cli import EXIT_DATA, EXIT_OK, EXIT_TRAINING, EXIT_USAGE, main
from sentipipe.corpus import Corpus, TweetRecord, persist_corpus
from sentipipe.synthetic import load_bundled_corpus


@pytest.fixture(scope="module")
def corpus_file(tmp_path_factory):
    """First 300 bundled synthetic tweets as an input CSV."""
    path = tmp_path_factory.mktemp("data") / "tweets.csv"
    corpus = load_bundled_corpus()
    persist_corpus(Corpus(corpus.records[:300]), str(path))
    return str(path)


def run(*args: str) -> int:
    return main(list(args))


class TestStageChain:
    def test_full_chain(self, corpus_file, tmp_path, capsys):
        out = str(tmp_path / "run")
        assert run("ingest", "--corpus.path", corpus_file, "--out.dir", out) == EXIT_OK
        assert run("label", "--out.dir", out) == EXIT_OK
        assert run("featurize", "--out.dir", out) == EXIT_OK
        assert run("train", "--out.dir", out, "--model.kind", "nb") == EXIT_OK
        assert run("report", "--out.dir", out, "--report.top_k", "5") == EXIT_OK
        for name in (
            "corpus.csv", "labeled.csv", "tfidf_model.txt", "model_nb.json",
            "freq_positive.csv", "freq_negative.csv",
            "wordcloud_positive.svg", "wordcloud_negative.svg",
        ):
            assert os.path.exists(os.path.join(out, name)), name
        stdout = capsys.readouterr().out
        assert "ingest: accepted=300" in stdout

    def test_missing_predecessor_names_prior_stage(self, tmp_path, capsys):
        out = str(tmp_path / "fresh")
        os.makedirs(out)
        assert run("train", "--out.dir", out) == EXIT_USAGE
        message = capsys.readouterr().err
        assert "`label`" in message

    def test_evaluate_writes_report_and_svg(self, corpus_file, tmp_path):
        out = str(tmp_path / "ev")
        run("ingest", "--corpus.path", corpus_file, "--out.dir", out)
        run("label", "--out.dir", out)
        code = run(
            "evaluate", "--out.dir", out, "--model.kind", "rf",
            "--model.n_trees", "5", "--model.max_depth", "8", "--cv.k", "3",
        )
        assert code == EXIT_OK
        for name in ("report_rf.csv", "report_rf.txt", "roc_rf.csv",
                     "folds_rf.csv", "roc.svg"):
            assert os.path.exists(os.path.join(out, name)), name
        with open(os.path.join(out, "folds_rf.csv")) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["fold", "accuracy", "macro_f1", "auc", "warning"]
        assert len(rows) == 4

    def test_compare_features_two_row_table(self, corpus_file, tmp_path):
        out = str(tmp_path / "cmp")
        run("ingest", "--corpus.path", corpus_file, "--out.dir", out)
        run("label", "--out.dir", out)
        code = run(
            "compare-features", "--out.dir", out, "--model.kind", "dt",
            "--model.max_depth", "8",
        )
        assert code == EXIT_OK
        with open(os.path.join(out, "feature_comparison.csv")) as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["feature_set", "n_min", "n_max", "accuracy"]
        assert [r[0] for r in rows[1:]] == ["tfidf-word", "tfidf-ngram"]
        for row in rows[1:]:
            assert 0.0 <= float(row[3]) <= 1.0


class TestExitCodes:
    def test_usage_error_for_unknown_key(self, tmp_path):
        assert run("label", "--out.dir", str(tmp_path), "--no.such.key", "1") == EXIT_USAGE

    def test_usage_error_for_missing_value(self, tmp_path):
        assert run("label", "--out.dir", str(tmp_path), "--cv.k") == EXIT_USAGE

    def test_usage_error_for_bad_subcommand(self):
        assert run("frobnicate") == EXIT_USAGE

    def test_data_error_for_missing_corpus(self, tmp_path):
        code = run(
            "ingest", "--corpus.path", str(tmp_path / "none.csv"),
            "--out.dir", str(tmp_path / "o"),
        )
        assert code == EXIT_DATA

    def test_usage_error_when_ingest_lacks_path(self, tmp_path):
        assert run("ingest", "--out.dir", str(tmp_path / "o")) == EXIT_USAGE

    def test_data_error_for_schema_mismatch(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        code = run(
            "ingest", "--corpus.path", str(bad), "--out.dir", str(tmp_path / "o")
        )
        assert code == EXIT_DATA

    def test_training_error_exit_code(self, corpus_file, tmp_path):
        out = str(tmp_path / "tr")
        run("ingest", "--corpus.path", corpus_file, "--out.dir", out)
        run("label", "--out.dir", out)
        run("featurize", "--out.dir", out)
        code = run(
            "train", "--out.dir", out, "--model.kind", "lr",
            "--model.learning_rate", "1e9", "--model.epochs", "50",
        )
        assert code == EXIT_TRAINING

    def test_train_rejects_kind_all(self, corpus_file, tmp_path):
        out = str(tmp_path / "ta")
        run("ingest", "--corpus.path", corpus_file, "--out.dir", out)
        run("label", "--out.dir", out)
        run("featurize", "--out.dir", out)
        assert run("train", "--out.dir", out, "--model.kind", "all") == EXIT_USAGE


class TestDeterminism:
    def _evaluate(self, corpus_file, out, workers):
        run("ingest", "--corpus.path", corpus_file, "--out.dir", out)
        run("label", "--out.dir", out)
        code = run(
            "evaluate", "--out.dir", out, "--seed", "42", "--workers", str(workers),
            "--model.kind", "rf", "--model.n_trees", "6",
            "--model.max_depth", "8", "--cv.k", "3",
        )
        assert code == EXIT_OK

    def test_artifacts_identical_across_runs_and_workers(self, corpus_file, tmp_path):
        out_a = str(tmp_path / "a")
        out_b = str(tmp_path / "b")
        self._evaluate(corpus_file, out_a, workers=1)
        self._evaluate(corpus_file, out_b, workers=3)
        for name in ("report_rf.csv", "report_rf.txt", "roc_rf.csv", "roc.svg"):
            with open(os.path.join(out_a, name), "rb") as fh:
                first = fh.read()
            with open(os.path.join(out_b, name), "rb") as fh:
                second = fh.read()
            assert first == second, name

    def test_seed_changes_artifacts(self, corpus_file, tmp_path):
        out_a = str(tmp_path / "s1")
        out_b = str(tmp_path / "s2")
        for out, seed in ((out_a, "1"), (out_b, "2")):
            run("ingest", "--corpus.path", corpus_file, "--out.dir", out)
            run("label", "--out.dir", out)
            run(
                "evaluate", "--out.dir", out, "--seed", seed,
                "--model.kind", "dt", "--model.max_depth", "6", "--cv.k", "3",
            )
        with open(os.path.join(out_a, "report_dt.csv"), "rb") as fh:
            first = fh.read()
        with open(os.path.join(out_b, "report_dt.csv"), "rb") as fh:
            second = fh.read()
        assert first != second


class TestConfigFile:
    def test_config_file_plus_override(self, corpus_file, tmp_path, capsys):
        conf = tmp_path / "run.conf"
        conf.write_text(
            f"corpus.path = {corpus_file}\nout.dir = {tmp_path / 'cfg'}\ncv.k = 4\n"
        )
        assert run("ingest", "--config", str(conf)) == EXIT_OK
        assert run("label", "--config", str(conf)) == EXIT_OK
        capsys.readouterr()
        assert run(
            "evaluate", "--config", str(conf), "--model.kind", "dt",
            "--model.max_depth", "6", "--cv.k", "2",
        ) == EXIT_OK
        out = capsys.readouterr().out
        assert "evaluate: kind=dt" in out
        with open(tmp_path / "cfg" / "folds_dt.csv") as fh:
            assert len(fh.read().splitlines()) == 3  # header + k=2 folds

    def test_version_flag(self, capsys):
        assert run("--version") == EXIT_OK
