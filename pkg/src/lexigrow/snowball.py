"""Snowball English (Porter2) stemmer.

Pure-Python implementation of the published algorithm, verified token for
token against frozen reference vectors (see tests/data/snowball_vocab.tsv).
R1/R2 are carried as suffix strings alongside the word: every edit trims or
extends them in lockstep, which preserves the region semantics without
recomputing regions after each step.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["stem", "stem_word"]

_VOWELS = "aeiouy"
_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
_LI_ENDINGS = "cdeghkmnrt"

_STEP0 = ("'s'", "'s", "'")
_STEP1A = ("sses", "ied", "ies", "us", "ss", "s")
_STEP1B = ("eedly", "ingly", "edly", "eed", "ing", "ed")
# Ordered so that the longest candidate wins before any of its own suffixes.
_STEP2 = (
    "ization", "ational", "fulness", "ousness", "iveness", "tional",
    "biliti", "lessli", "entli", "ation", "alism", "aliti", "ousli",
    "iviti", "fulli", "enci", "anci", "abli", "izer", "ator", "alli",
    "bli", "ogi", "li",
)
_STEP3 = ("ational", "tional", "alize", "icate", "iciti", "ative", "ical", "ness", "ful")
_STEP4 = (
    "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent",
    "ism", "ate", "iti", "ous", "ive", "ize", "ion", "al", "er", "ic",
)

# Irregular forms and words the suffix rules would mangle.
_SPECIAL = {
    "skis": "ski", "skies": "sky", "dying": "die", "lying": "lie",
    "tying": "tie", "idly": "idl", "gently": "gentl", "ugly": "ugli",
    "early": "earli", "only": "onli", "singly": "singl",
    "sky": "sky", "news": "news", "howe": "howe", "atlas": "atlas",
    "cosmos": "cosmos", "bias": "bias", "andes": "andes",
    "inning": "inning", "innings": "inning",
    "outing": "outing", "outings": "outing",
    "canning": "canning", "cannings": "canning",
    "herring": "herring", "herrings": "herring",
    "earring": "earring", "earrings": "earring",
    "proceed": "proceed", "proceeds": "proceed",
    "proceeded": "proceed", "proceeding": "proceed",
    "exceed": "exceed", "exceeds": "exceed",
    "exceeded": "exceed", "exceeding": "exceed",
    "succeed": "succeed", "succeeds": "succeed",
    "succeeded": "succeed", "succeeding": "succeed",
}


def _replace(text: str, old: str, new: str) -> str:
    return text[: -len(old)] + new


def _regions(word: str) -> tuple[str, str]:
    """R1: after the first non-vowel that follows a vowel; R2: same rule inside R1."""
    if word.startswith(("gener", "arsen")):
        r1 = word[5:]
    elif word.startswith("commun"):
        r1 = word[6:]
    else:
        r1 = ""
        for i in range(1, len(word)):
            if word[i] not in _VOWELS and word[i - 1] in _VOWELS:
                r1 = word[i + 1:]
                break
    r2 = ""
    for i in range(1, len(r1)):
        if r1[i] not in _VOWELS and r1[i - 1] in _VOWELS:
            r2 = r1[i + 1:]
            break
    return r1, r2


def _step0(word: str, r1: str, r2: str) -> tuple[str, str, str]:
    for suffix in _STEP0:
        if word.endswith(suffix):
            k = len(suffix)
            return word[:-k], r1[:-k], r2[:-k]
    return word, r1, r2


def _step1a(word: str, r1: str, r2: str) -> tuple[str, str, str]:
    for suffix in _STEP1A:
        if not word.endswith(suffix):
            continue
        if suffix == "sses":
            word, r1, r2 = word[:-2], r1[:-2], r2[:-2]
        elif suffix in ("ied", "ies"):
            # Keep "ie" for two-letter stems like "tie"/"die" plurals.
            k = 2 if len(word[:-3]) > 1 else 1
            word, r1, r2 = word[:-k], r1[:-k], r2[:-k]
        elif suffix == "s":
            if any(ch in _VOWELS for ch in word[:-2]):
                word, r1, r2 = word[:-1], r1[:-1], r2[:-1]
        break
    return word, r1, r2


def _step1b(word: str, r1: str, r2: str) -> tuple[str, str, str]:
    for suffix in _STEP1B:
        if not word.endswith(suffix):
            continue
        if suffix in ("eed", "eedly"):
            if r1.endswith(suffix):
                word = _replace(word, suffix, "ee")
                r1 = _replace(r1, suffix, "ee") if len(r1) >= len(suffix) else ""
                r2 = _replace(r2, suffix, "ee") if len(r2) >= len(suffix) else ""
            break
        if not any(ch in _VOWELS for ch in word[: -len(suffix)]):
            break
        k = len(suffix)
        word, r1, r2 = word[:-k], r1[:-k], r2[:-k]
        if word.endswith(("at", "bl", "iz")):
            word += "e"
            r1 += "e"
            if len(word) > 5 or len(r1) >= 3:
                r2 += "e"
        elif word.endswith(_DOUBLES):
            word, r1, r2 = word[:-1], r1[:-1], r2[:-1]
        elif r1 == "" and _ends_short_syllable(word):
            word += "e"
            if r1:
                r1 += "e"
            if r2:
                r2 += "e"
        break
    return word, r1, r2


def _ends_short_syllable(word: str) -> bool:
    if (
        len(word) >= 3
        and word[-1] not in _VOWELS
        and word[-1] not in "wxY"
        and word[-2] in _VOWELS
        and word[-3] not in _VOWELS
    ):
        return True
    return len(word) == 2 and word[0] in _VOWELS and word[1] not in _VOWELS


def _step1c(word: str, r1: str, r2: str) -> tuple[str, str, str]:
    if len(word) > 2 and word[-1] in "yY" and word[-2] not in _VOWELS:
        word = word[:-1] + "i"
        r1 = r1[:-1] + "i" if r1 else ""
        r2 = r2[:-1] + "i" if r2 else ""
    return word, r1, r2


def _rewrite(word: str, r1: str, r2: str, suffix: str, new: str,
             r2_fallback: str = "") -> tuple[str, str, str]:
    # The fallback covers suffixes longer than R2: the replacement's tail may
    # still land inside R2 even though the full suffix never did.
    word = _replace(word, suffix, new)
    r1 = _replace(r1, suffix, new) if len(r1) >= len(suffix) else ""
    r2 = _replace(r2, suffix, new) if len(r2) >= len(suffix) else r2_fallback
    return word, r1, r2


def _step2(word: str, r1: str, r2: str) -> tuple[str, str, str]:
    for suffix in _STEP2:
        if not word.endswith(suffix):
            continue
        if r1.endswith(suffix):
            if suffix == "tional":
                word, r1, r2 = word[:-2], r1[:-2], r2[:-2]
            elif suffix in ("enci", "anci", "abli"):
                word = word[:-1] + "e"
                r1 = r1[:-1] + "e" if r1 else ""
                r2 = r2[:-1] + "e" if r2 else ""
            elif suffix == "entli":
                word, r1, r2 = word[:-2], r1[:-2], r2[:-2]
            elif suffix in ("izer", "ization"):
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "ize")
            elif suffix in ("ational", "ation", "ator"):
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "ate", r2_fallback="e")
            elif suffix in ("alism", "aliti", "alli"):
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "al")
            elif suffix == "fulness":
                word, r1, r2 = word[:-4], r1[:-4], r2[:-4]
            elif suffix in ("ousli", "ousness"):
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "ous")
            elif suffix in ("iveness", "iviti"):
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "ive", r2_fallback="e")
            elif suffix in ("biliti", "bli"):
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "ble")
            elif suffix == "ogi" and word[-4] == "l":
                word, r1, r2 = word[:-1], r1[:-1], r2[:-1]
            elif suffix in ("fulli", "lessli"):
                word, r1, r2 = word[:-2], r1[:-2], r2[:-2]
            elif suffix == "li" and word[-3] in _LI_ENDINGS:
                word, r1, r2 = word[:-2], r1[:-2], r2[:-2]
        break
    return word, r1, r2


def _step3(word: str, r1: str, r2: str) -> tuple[str, str, str]:
    for suffix in _STEP3:
        if not word.endswith(suffix):
            continue
        if r1.endswith(suffix):
            if suffix == "tional":
                word, r1, r2 = word[:-2], r1[:-2], r2[:-2]
            elif suffix == "ational":
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "ate")
            elif suffix == "alize":
                word, r1, r2 = word[:-3], r1[:-3], r2[:-3]
            elif suffix in ("icate", "iciti", "ical"):
                word, r1, r2 = _rewrite(word, r1, r2, suffix, "ic")
            elif suffix in ("ful", "ness"):
                k = len(suffix)
                word, r1, r2 = word[:-k], r1[:-k], r2[:-k]
            elif suffix == "ative" and r2.endswith(suffix):
                word, r1, r2 = word[:-5], r1[:-5], r2[:-5]
        break
    return word, r1, r2


def _step4(word: str, r1: str, r2: str) -> tuple[str, str, str]:
    for suffix in _STEP4:
        if not word.endswith(suffix):
            continue
        if r2.endswith(suffix):
            if suffix == "ion":
                if word[-4] in "st":
                    word, r1, r2 = word[:-3], r1[:-3], r2[:-3]
            else:
                k = len(suffix)
                word, r1, r2 = word[:-k], r1[:-k], r2[:-k]
        break
    return word, r1, r2


def _step5(word: str, r1: str, r2: str) -> str:
    if r2.endswith("l") and word[-2] == "l":
        return word[:-1]
    if r2.endswith("e"):
        return word[:-1]
    if r1.endswith("e"):
        # Keep the e after a short syllable (e.g. "hope" stays).
        if len(word) >= 4 and (
            word[-2] in _VOWELS
            or word[-2] in "wxY"
            or word[-3] not in _VOWELS
            or word[-4] in _VOWELS
        ):
            return word[:-1]
    return word


def stem_word(word: str) -> str:
    """Stem a single word (no underscore handling)."""
    word = word.lower()
    if len(word) <= 2:
        return word
    if word in _SPECIAL:
        return _SPECIAL[word]

    word = word.replace("’", "'").replace("‘", "'").replace("‛", "'")
    if word.startswith("'"):
        word = word[1:]
    if word.startswith("y"):
        word = "Y" + word[1:]
    # Mark y-as-consonant after vowels so the suffix rules skip it.
    for i in range(1, len(word)):
        if word[i] == "y" and word[i - 1] in _VOWELS:
            word = word[:i] + "Y" + word[i + 1:]

    r1, r2 = _regions(word)
    word, r1, r2 = _step0(word, r1, r2)
    word, r1, r2 = _step1a(word, r1, r2)
    word, r1, r2 = _step1b(word, r1, r2)
    word, r1, r2 = _step1c(word, r1, r2)
    word, r1, r2 = _step2(word, r1, r2)
    word, r1, r2 = _step3(word, r1, r2)
    word, r1, r2 = _step4(word, r1, r2)
    word = _step5(word, r1, r2)
    return word.replace("Y", "y")


@lru_cache(maxsize=200_000)
def stem(token: str) -> str:
    """Stem a token; underscore-joined segments are stemmed independently.

    >>> stem("headaches")
    'headach'
    >>> stem("chili_peppers")
    'chili_pepper'
    """
    if "_" not in token:
        return stem_word(token)
    return "_".join(stem_word(seg) if seg else "" for seg in token.split("_"))
