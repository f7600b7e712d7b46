"""Query and document text normalization.

Fixed six-stage pipeline: junk stripping, word breaking, lowercasing,
spell correction against a vocabulary, rule-based lemmatization, and
stop-word removal. Every stage is deterministic; the stop-word list and
the lemma exception table are bundled data files whose hashes pin
trained ranker models to the text processing they were built with.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Collection, Mapping

DATA_DIR = Path(__file__).parent / "data"

VOWELS = "aeiouy"

# Curly quotes and long dashes appear in real FAQ pages; fold them into
# their ASCII forms before junk stripping so contractions survive.
_CHAR_FOLD = str.maketrans({"’": "'", "‘": "'", "–": "-", "—": "-"})

_JUNK_RE = re.compile(r"[^A-Za-z0-9\s'\-]+")
_BREAK_RE = re.compile(r"[\s\-]+")


def _data_path(name: str, override: str | Path | None = None) -> Path:
    return Path(override) if override is not None else DATA_DIR / name


@lru_cache(maxsize=8)
def _load_stopwords_cached(path: str) -> frozenset[str]:
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    return _load_stopwords_cached(str(_data_path("stopwords.txt", path)))


@lru_cache(maxsize=8)
def _load_exceptions_cached(path: str) -> dict[str, str]:
    table: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"lemma exceptions line {lineno}: expected 'surface<TAB>lemma'")
        table[parts[0].strip().lower()] = parts[1].strip().lower()
    return table


def load_lemma_exceptions(path: str | Path | None = None) -> Mapping[str, str]:
    return _load_exceptions_cached(str(_data_path("lemma-exceptions.tsv", path)))


def stopwords_fingerprint(path: str | Path | None = None) -> str:
    """SHA-256 of the bundled stop-word file, used as a model provenance pin."""
    return hashlib.sha256(_data_path("stopwords.txt", path).read_bytes()).hexdigest()


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    position: int


@dataclass(frozen=True)
class TokenStream:
    original: str
    tokens: tuple[Token, ...]

    @property
    def lemmas(self) -> list[str]:
        return [t.lemma for t in self.tokens]

    def __len__(self) -> int:
        return len(self.tokens)


def damerau_levenshtein(a: str, b: str, cap: int | None = None) -> int:
    """Edit distance with adjacent transpositions (optimal string alignment).

    With ``cap`` set, returns ``cap + 1`` as soon as the distance provably
    exceeds it, which keeps vocabulary scans cheap.
    """
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if cap is not None and abs(la - lb) > cap:
        return cap + 1
    if la == 0:
        return lb
    if lb == 0:
        return la

    prev2: list[int] = []
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        cur = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                cur[j] = min(cur[j], prev2[j - 2] + 1)
        if cap is not None and min(cur) > cap:
            return cap + 1
        prev2, prev = prev, cur
    return prev[lb]


def edit_distance_bound(token: str) -> int:
    return 1 if len(token) <= 4 else 2


def spell_correct(
    token: str,
    vocab: Collection[str],
    freq: Mapping[str, int] | None = None,
) -> str:
    """Correct ``token`` to the closest vocabulary word within the edit bound.

    Ties go to the higher-frequency word, then the lexicographically
    smaller one. Returns the token unchanged when nothing is close enough.
    """
    if not vocab or token in vocab:
        return token
    bound = edit_distance_bound(token)
    freq = freq or {}
    best: tuple[int, int, str] | None = None
    for word in vocab:
        if abs(len(word) - len(token)) > bound:
            continue
        dist = damerau_levenshtein(token, word, cap=bound)
        if dist > bound:
            continue
        key = (dist, -freq.get(word, 0), word)
        if best is None or key < best:
            best = key
    return best[2] if best is not None else token


def _repair_doubling(stem: str) -> str:
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS and stem[-1] not in "lsz":
        return stem[:-1]
    return stem


def _has_vowel(word: str) -> bool:
    return any(c in VOWELS for c in word)


def _apply_suffix_rules(token: str) -> str:
    if token.endswith("ies") and len(token) > 4:
        return token[:-3] + "y"
    if token.endswith("sses"):
        return token[:-2]
    if token.endswith(("xes", "ches", "shes")):
        return token[:-2]
    if token.endswith("oes") and len(token) > 4:
        return token[:-2]
    if token.endswith("ss") or token.endswith("us") or token.endswith("is"):
        return token
    if token.endswith("s") and len(token) > 3:
        return token[:-1]
    if token.endswith("eed"):
        return token
    if token.endswith("ed") and len(token) >= 5 and _has_vowel(token[:-2]):
        return _repair_doubling(token[:-2])
    if token.endswith("ing") and len(token) >= 6 and _has_vowel(token[:-3]):
        return _repair_doubling(token[:-3])
    return token


def lemmatize(token: str, exceptions: Mapping[str, str] | None = None) -> str:
    """Suffix-rule lemmatizer with an exception table for irregular forms.

    Rules run to a fixed point ("meetings" -> "meeting" -> "meet") so the
    output is always its own lemma; exception values are chosen to be
    fixed points themselves.
    """
    exceptions = exceptions if exceptions is not None else load_lemma_exceptions()
    word = token
    while True:
        if word in exceptions:
            return exceptions[word]
        shorter = _apply_suffix_rules(word)
        if shorter == word:
            return word
        word = shorter


def word_break(text: str) -> list[str]:
    """Stages 1-3: junk stripping, breaking on whitespace/hyphens, lowercasing.

    Apostrophes survive junk stripping so contractions stay one token, then
    get dropped from the token itself ("what's" -> "whats").
    """
    folded = text.translate(_CHAR_FOLD)
    cleaned = _JUNK_RE.sub("", folded)
    tokens = []
    for raw in _BREAK_RE.split(cleaned):
        tok = raw.replace("'", "").lower()
        if tok:
            tokens.append(tok)
    return tokens


def normalize(
    text: str,
    vocab: Collection[str] | None = None,
    freq: Mapping[str, int] | None = None,
    stopwords: Collection[str] | None = None,
    exceptions: Mapping[str, str] | None = None,
) -> TokenStream:
    """Run the full six-stage pipeline over raw text.

    ``vocab`` enables spell correction (stage 4); without it the stage is a
    no-op, which is how knowledge-base content is tokenized (the KB is its
    own vocabulary). Misspelled stop-words are corrected before the stop
    list is applied so they are still removed.
    """
    stopwords = stopwords if stopwords is not None else load_stopwords()
    exceptions = exceptions if exceptions is not None else load_lemma_exceptions()
    tokens: list[Token] = []
    for position, surface in enumerate(word_break(text)):
        corrected = spell_correct(surface, vocab, freq) if vocab else surface
        lemma = lemmatize(corrected, exceptions)
        if surface in stopwords or corrected in stopwords or lemma in stopwords:
            continue
        tokens.append(Token(surface=surface, lemma=lemma, position=position))
    return TokenStream(original=text, tokens=tuple(tokens))


def ascii_letter_ratio(text: str) -> float:
    """Share of letter characters that are ASCII; 1.0 when there are none."""
    letters = [c for c in text if c.isalpha()]
    if not letters:
        return 1.0
    ascii_count = sum(1 for c in letters if c.isascii())
    return ascii_count / len(letters)


def looks_english(text: str, threshold: float = 0.66) -> bool:
    return ascii_letter_ratio(text) >= threshold
