import pytest

from sentipipe.lexicon import OpinionLexicon, load_bundled_lexicon
from sentipipe.textprep import bundled_stopwords


@pytest.fixture(scope="session")
def bundled_lexicon() -> OpinionLexicon:
    return load_bundled_lexicon()


@pytest.fixture(scope="session")
def stopwords() -> frozenset[str]:
    return bundled_stopwords()


@pytest.fixture(scope="session")
def tiny_lexicon() -> OpinionLexicon:
    """Small fixed lexicon for hand-countable scoring tests."""
    return OpinionLexicon(
        positive=frozenset({"good", "great", "cheap", "fair"}),
        negative=frozenset({"bad", "poor", "wrong", "grim"}),
    )
