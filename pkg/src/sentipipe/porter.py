"""Porter suffix-stripping stemmer (the classic 1980 rule set, steps 1a-5b).

Rules operate on lowercase ASCII words. Within a step the longest matching
suffix is selected first; if its condition fails, no rule in that step fires.
Stemming is deterministic but not idempotent (e.g. "ponies" -> "poni").
"""

from __future__ import annotations

_VOWELS = "aeiou"


def _is_consonant(word: str, i: int) -> bool:
    c = word[i]
    if c in _VOWELS:
        return False
    if c == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of vowel-consonant sequences: [C](VC)^m[V]."""
    m = 0
    prev_consonant = None
    for i in range(len(stem)):
        consonant = _is_consonant(stem, i)
        if prev_consonant is False and consonant:
            m += 1
        prev_consonant = consonant
    return m


def _contains_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    """Consonant-vowel-consonant ending where the final consonant is not w, x or y."""
    if len(word) < 3:
        return False
    return (
        _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


def _apply_step(word, rules):
    """Apply the first (longest) matching rule; a failed condition ends the step."""
    for suffix, replacement, condition in rules:
        if word.endswith(suffix):
            stem = word[: len(word) - len(suffix)]
            if condition(stem):
                return stem + replacement
            return word
    return word


def _m_gt_0(stem):
    return _measure(stem) > 0


def _m_gt_1(stem):
    return _measure(stem) > 1


_STEP_1A = (
    ("sses", "ss", lambda stem: True),
    ("ies", "i", lambda stem: True),
    ("ss", "ss", lambda stem: True),
    ("s", "", lambda stem: True),
)

_STEP_2 = (
    ("ational", "ate", _m_gt_0),
    ("tional", "tion", _m_gt_0),
    ("enci", "ence", _m_gt_0),
    ("anci", "ance", _m_gt_0),
    ("izer", "ize", _m_gt_0),
    ("abli", "able", _m_gt_0),
    ("alli", "al", _m_gt_0),
    ("entli", "ent", _m_gt_0),
    ("eli", "e", _m_gt_0),
    ("ousli", "ous", _m_gt_0),
    ("ization", "ize", _m_gt_0),
    ("ation", "ate", _m_gt_0),
    ("ator", "ate", _m_gt_0),
    ("alism", "al", _m_gt_0),
    ("iveness", "ive", _m_gt_0),
    ("fulness", "ful", _m_gt_0),
    ("ousness", "ous", _m_gt_0),
    ("aliti", "al", _m_gt_0),
    ("iviti", "ive", _m_gt_0),
    ("biliti", "ble", _m_gt_0),
)

_STEP_3 = (
    ("icate", "ic", _m_gt_0),
    ("ative", "", _m_gt_0),
    ("alize", "al", _m_gt_0),
    ("iciti", "ic", _m_gt_0),
    ("ical", "ic", _m_gt_0),
    ("ful", "", _m_gt_0),
    ("ness", "", _m_gt_0),
)

_STEP_4 = (
    ("al", "", _m_gt_1),
    ("ance", "", _m_gt_1),
    ("ence", "", _m_gt_1),
    ("er", "", _m_gt_1),
    ("ic", "", _m_gt_1),
    ("able", "", _m_gt_1),
    ("ible", "", _m_gt_1),
    ("ant", "", _m_gt_1),
    ("ement", "", _m_gt_1),
    ("ment", "", _m_gt_1),
    ("ent", "", _m_gt_1),
    ("ion", "", lambda stem: _m_gt_1(stem) and stem[-1:] in ("s", "t")),
    ("ou", "", _m_gt_1),
    ("ism", "", _m_gt_1),
    ("ate", "", _m_gt_1),
    ("iti", "", _m_gt_1),
    ("ous", "", _m_gt_1),
    ("ive", "", _m_gt_1),
    ("ize", "", _m_gt_1),
)


def _step_1b(word: str) -> str:
    if word.endswith("eed"):
        stem = word[:-3]
        if _measure(stem) > 0:
            return word[:-1]
        return word
    stripped = None
    if word.endswith("ed"):
        stem = word[:-2]
        if _contains_vowel(stem):
            stripped = stem
    elif word.endswith("ing"):
        stem = word[:-3]
        if _contains_vowel(stem):
            stripped = stem
    if stripped is None:
        return word
    if stripped.endswith(("at", "bl", "iz")):
        return stripped + "e"
    if _ends_double_consonant(stripped) and stripped[-1] not in "lsz":
        return stripped[:-1]
    if _measure(stripped) == 1 and _ends_cvc(stripped):
        return stripped + "e"
    return stripped


def _step_1c(word: str) -> str:
    if word.endswith("y") and _contains_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


def _step_5a(word: str) -> str:
    if not word.endswith("e"):
        return word
    stem = word[:-1]
    m = _measure(stem)
    if m > 1:
        return stem
    if m == 1 and not _ends_cvc(stem):
        return stem
    return word


def _step_5b(word: str) -> str:
    if word.endswith("ll") and _measure(word[:-1]) > 1:
        return word[:-1]
    return word


def stem(token: str) -> str:
    """Stem a single lowercase ASCII-letter token.

    Tokens containing anything other than lowercase ASCII letters, and tokens
    shorter than three characters, are returned unchanged.
    """
    if len(token) < 3 or not token.isascii() or not token.isalpha() or not token.islower():
        return token
    word = _apply_step(token, _STEP_1A)
    word = _step_1b(word)
    word = _step_1c(word)
    word = _apply_step(word, _STEP_2)
    word = _apply_step(word, _STEP_3)
    word = _apply_step(word, _STEP_4)
    word = _step_5a(word)
    word = _step_5b(word)
    return word
