"""Deterministic tweet-text cleaning, tokenization, stopword removal, stemming.

Cleaning is an ordered list of individually toggleable steps; the default
order lowercases first and collapses whitespace last. All operations are pure
functions, so documents can be processed concurrently without coordination.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .errors import ConfigurationError
from .porter import stem

STEP_LOWERCASE = "lowercase"
STEP_STRIP_URLS = "strip_urls"
STEP_STRIP_MENTIONS = "strip_mentions"
STEP_STRIP_HASHTAG_MARKS = "strip_hashtag_marks"
STEP_STRIP_DIGITS = "strip_digits"
STEP_STRIP_SPECIAL_CHARS = "strip_special_chars"
STEP_COLLAPSE_WHITESPACE = "collapse_whitespace"

DEFAULT_STEP_ORDER = (
    STEP_LOWERCASE,
    STEP_STRIP_URLS,
    STEP_STRIP_MENTIONS,
    STEP_STRIP_HASHTAG_MARKS,
    STEP_STRIP_DIGITS,
    STEP_STRIP_SPECIAL_CHARS,
    STEP_COLLAPSE_WHITESPACE,
)

_URL_RE = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*://\S+")
_MENTION_RE = re.compile(r"@\w+")
_DIGIT_RE = re.compile(r"\d")
_NON_LETTER_RE = re.compile(r"[^a-zA-Z \t\n\r\f\v]")
_WHITESPACE_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class CleaningConfig:
    """Ordered, toggleable cleaning steps applied by :func:`clean_text`."""

    steps: tuple[str, ...] = DEFAULT_STEP_ORDER

    def __post_init__(self):
        unknown = [s for s in self.steps if s not in DEFAULT_STEP_ORDER]
        if unknown:
            raise ConfigurationError(f"unknown cleaning steps: {unknown}")
        if len(set(self.steps)) != len(self.steps):
            raise ConfigurationError("cleaning steps must not repeat")
        if STEP_COLLAPSE_WHITESPACE in self.steps and self.steps[-1] != STEP_COLLAPSE_WHITESPACE:
            raise ConfigurationError("collapse_whitespace must be the last step when enabled")

    @classmethod
    def from_flags(cls, **enabled: bool) -> "CleaningConfig":
        """Build a config from per-step booleans, keeping the default order."""
        unknown = [name for name in enabled if name not in DEFAULT_STEP_ORDER]
        if unknown:
            raise ConfigurationError(f"unknown cleaning steps: {unknown}")
        return cls(tuple(s for s in DEFAULT_STEP_ORDER if enabled.get(s, True)))


def _strip_urls(text: str) -> str:
    return _URL_RE.sub("", text)


def _strip_mentions(text: str) -> str:
    return _MENTION_RE.sub("", text)


def _strip_hashtag_marks(text: str) -> str:
    return text.replace("#", "")


def _strip_digits(text: str) -> str:
    return _DIGIT_RE.sub("", text)


def _strip_special_chars(text: str) -> str:
    return _NON_LETTER_RE.sub("", text)


def _collapse_whitespace(text: str) -> str:
    return _WHITESPACE_RE.sub(" ", text).strip()


_STEP_FUNCTIONS = {
    STEP_LOWERCASE: str.lower,
    STEP_STRIP_URLS: _strip_urls,
    STEP_STRIP_MENTIONS: _strip_mentions,
    STEP_STRIP_HASHTAG_MARKS: _strip_hashtag_marks,
    STEP_STRIP_DIGITS: _strip_digits,
    STEP_STRIP_SPECIAL_CHARS: _strip_special_chars,
    STEP_COLLAPSE_WHITESPACE: _collapse_whitespace,
}

DEFAULT_CLEANING = CleaningConfig()


def clean_text(raw: str, config: CleaningConfig = DEFAULT_CLEANING) -> str:
    """Apply the configured cleaning steps in order. Total function; never raises."""
    text = raw
    for step in config.steps:
        text = _STEP_FUNCTIONS[step](text)
    return text


def tokenize(cleaned: str) -> tuple[str, ...]:
    """Split on whitespace runs; never emits empty tokens."""
    return tuple(cleaned.split())


def load_stopwords(source) -> frozenset[str]:
    """Read a one-word-per-line stopword file; ``#`` lines are comments."""
    if hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    words = set()
    for line in lines:
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        words.add(word.lower())
    return frozenset(words)


def bundled_stopwords() -> frozenset[str]:
    """The English stopword list shipped with the package."""
    text = resources.files("sentipipe.data").joinpath("stopwords.txt").read_text("utf-8")
    return load_stopwords(io.StringIO(text))


def remove_stopwords(tokens: Iterable[str], stopwords: frozenset[str]) -> tuple[str, ...]:
    """Drop exact matches, preserving order."""
    return tuple(t for t in tokens if t not in stopwords)


def preprocess(
    raw: str,
    config: CleaningConfig = DEFAULT_CLEANING,
    stopwords: frozenset[str] = frozenset(),
) -> tuple[str, ...]:
    """Full pipeline: clean, tokenize, remove stopwords, stem."""
    tokens = remove_stopwords(tokenize(clean_text(raw, config)), stopwords)
    return tuple(stem(t) for t in tokens)
