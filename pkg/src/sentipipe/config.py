"""Flat key-value pipeline configuration with section-prefixed keys.

The config file is plain text, one ``section.key = value`` per line, with
``#`` comments. Every key can be overridden on the command line by a flag of
the same name (``--cv.k 10``). All stage randomness derives from the single
master ``seed``: each stage hashes (seed, stage name) into its own stream, so
changing the master seed permutes every split without touching schemas.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .classifiers import MODEL_KINDS, ModelSpec
from .corpus import SplitSpec
from .errors import ConfigurationError
from .evaluation import CvConfig
from .features import IDF_LOG10, IDF_NATURAL_LOG, IDF_RAW_RATIO, NgramConfig
from .textprep import CleaningConfig, DEFAULT_STEP_ORDER

BUNDLED = "bundled"

DEFAULTS: dict[str, str] = {
    "corpus.path": "",
    "corpus.id_column": "id",
    "corpus.text_column": "text",
    "corpus.author_column": "author",
    "corpus.created_column": "created_at",
    "corpus.country_column": "country",
    "corpus.country": "all",
    "corpus.strict": "false",
    "lexicon.positive": BUNDLED,
    "lexicon.negative": BUNDLED,
    "lexicon.threshold": "0.1",
    "stopwords.path": BUNDLED,
    "clean.lowercase": "true",
    "clean.strip_urls": "true",
    "clean.strip_mentions": "true",
    "clean.strip_hashtag_marks": "true",
    "clean.strip_digits": "true",
    "clean.strip_special_chars": "true",
    "clean.collapse_whitespace": "true",
    "ngram.n_min": "1",
    "ngram.n_max": "1",
    "ngram.min_df": "2",
    "compare.n_min": "2",
    "compare.n_max": "2",
    "idf.mode": IDF_NATURAL_LOG,
    "model.kind": "rf",
    "model.alpha": "1.0",
    "model.max_depth": "16",
    "model.min_samples_leaf": "1",
    "model.n_trees": "40",
    "model.features_per_split": "auto",
    "model.bootstrap": "true",
    "model.learning_rate": "5.0",
    "model.epochs": "500",
    "model.l2": "1e-4",
    "split.test_fraction": "0.3",
    "split.stratified": "true",
    "cv.k": "5",
    "cv.stratified": "true",
    "report.top_k": "25",
    "out.dir": "sentipipe-out",
    "seed": "42",
    "workers": "1",
}

_IDF_MODES = (IDF_NATURAL_LOG, IDF_LOG10, IDF_RAW_RATIO)


def parse_config_file(path: str) -> dict[str, str]:
    """Read ``key = value`` lines; unknown keys are configuration errors."""
    values: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file: {exc}") from exc
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigurationError(f"{path}:{number}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in DEFAULTS:
            raise ConfigurationError(f"{path}:{number}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def derive_stage_seed(master_seed: int, stage: str) -> int:
    """Stable 64-bit stage seed from the master seed and stage name."""
    digest = hashlib.sha256(f"{master_seed}:{stage}".encode()).digest()
    return int.from_bytes(digest[:8], "little")


@dataclass(frozen=True)
class PipelineConfig:
    """Typed view over the merged default/file/CLI key-value table."""

    values: dict[str, str] = field(default_factory=dict)

    @classmethod
    def load(
        cls, config_path: str | None = None, overrides: dict[str, str] | None = None
    ) -> "PipelineConfig":
        merged = dict(DEFAULTS)
        if config_path:
            merged.update(parse_config_file(config_path))
        for key, value in (overrides or {}).items():
            if key not in DEFAULTS:
                raise ConfigurationError(f"unknown config key {key!r}")
            merged[key] = value
        return cls(values=merged)

    def get(self, key: str) -> str:
        return self.values[key]

    def get_int(self, key: str) -> int:
        try:
            return int(self.values[key])
        except ValueError as exc:
            raise ConfigurationError(f"{key} must be an integer: {exc}") from exc

    def get_float(self, key: str) -> float:
        try:
            return float(self.values[key])
        except ValueError as exc:
            raise ConfigurationError(f"{key} must be a number: {exc}") from exc

    def get_bool(self, key: str) -> bool:
        value = self.values[key].lower()
        if value in ("true", "yes", "1", "on"):
            return True
        if value in ("false", "no", "0", "off"):
            return False
        raise ConfigurationError(f"{key} must be a boolean, got {self.values[key]!r}")

    @property
    def seed(self) -> int:
        return self.get_int("seed")

    @property
    def workers(self) -> int:
        workers = self.get_int("workers")
        if workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {workers}")
        return workers

    @property
    def out_dir(self) -> str:
        return self.get("out.dir")

    def stage_seed(self, stage: str) -> int:
        return derive_stage_seed(self.seed, stage)

    def corpus_schema(self) -> dict[str, str]:
        return {
            "id": self.get("corpus.id_column"),
            "text": self.get("corpus.text_column"),
            "author": self.get("corpus.author_column"),
            "created_at": self.get("corpus.created_column"),
            "country": self.get("corpus.country_column"),
        }

    def cleaning_config(self) -> CleaningConfig:
        enabled = {step: self.get_bool(f"clean.{step}") for step in DEFAULT_STEP_ORDER}
        return CleaningConfig.from_flags(**enabled)

    def ngram_config(self) -> NgramConfig:
        return NgramConfig(
            n_min=self.get_int("ngram.n_min"),
            n_max=self.get_int("ngram.n_max"),
            min_df=self.get_int("ngram.min_df"),
        )

    def compare_ngram_config(self) -> NgramConfig:
        return NgramConfig(
            n_min=self.get_int("compare.n_min"),
            n_max=self.get_int("compare.n_max"),
            min_df=self.get_int("ngram.min_df"),
        )

    def idf_mode(self) -> str:
        mode = self.get("idf.mode")
        if mode not in _IDF_MODES:
            raise ConfigurationError(
                f"idf.mode must be one of {_IDF_MODES}, got {mode!r}"
            )
        return mode

    def model_kinds(self) -> tuple[str, ...]:
        kind = self.get("model.kind")
        if kind == "all":
            return MODEL_KINDS
        if kind not in MODEL_KINDS:
            raise ConfigurationError(
                f"model.kind must be one of {MODEL_KINDS + ('all',)}, got {kind!r}"
            )
        return (kind,)

    def model_spec(self, kind: str) -> ModelSpec:
        max_depth_raw = self.get("model.max_depth").lower()
        max_depth = None if max_depth_raw in ("none", "unbounded") else int(max_depth_raw)
        fps_raw = self.get("model.features_per_split").lower()
        features_per_split = None if fps_raw in ("auto", "sqrt") else int(fps_raw)
        return ModelSpec(
            kind=kind,
            alpha=self.get_float("model.alpha"),
            max_depth=max_depth,
            min_samples_leaf=self.get_int("model.min_samples_leaf"),
            n_trees=self.get_int("model.n_trees"),
            features_per_split=features_per_split,
            bootstrap=self.get_bool("model.bootstrap"),
            learning_rate=self.get_float("model.learning_rate"),
            epochs=self.get_int("model.epochs"),
            l2=self.get_float("model.l2"),
            seed=self.stage_seed("model"),
        )

    def split_spec(self) -> SplitSpec:
        return SplitSpec(
            test_fraction=self.get_float("split.test_fraction"),
            seed=self.stage_seed("split"),
            stratified=self.get_bool("split.stratified"),
        )

    def cv_config(self) -> CvConfig:
        return CvConfig(
            k=self.get_int("cv.k"),
            seed=self.stage_seed("cv"),
            stratified=self.get_bool("cv.stratified"),
        )
