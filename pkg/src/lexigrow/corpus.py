"""Corpus ingestion: tokenize, filter, stem, and the token stream format.

The pipeline is tokenize -> normalize -> stem, applied per document; document
boundaries are preserved so downstream context windows never cross documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import CorpusError
from .snowball import stem

__all__ = [
    "RawDocument",
    "TokenStream",
    "StopwordSet",
    "ENGLISH_STOPWORDS",
    "DOMAIN_STOPWORDS",
    "tokenize",
    "normalize",
    "stem",
    "preprocess_corpus",
    "read_corpus",
    "load_stopword_file",
    "read_token_stream",
    "write_token_stream",
]

ENGLISH_STOPWORDS: frozenset[str] = frozenset([
    "a", "about", "above", "after", "again", "against", "ain", "all", "am",
    "an", "and", "any", "are", "aren", "aren't", "as", "at", "be", "because",
    "been", "before", "being", "below", "between", "both", "but", "by", "can",
    "couldn", "couldn't", "d", "did", "didn", "didn't", "do", "does", "doesn",
    "doesn't", "doing", "don", "don't", "down", "during", "each", "few",
    "for", "from", "further", "had", "hadn", "hadn't", "has", "hasn",
    "hasn't", "have", "haven", "haven't", "having", "he", "he'd", "he'll",
    "he's", "her", "here", "hers", "herself", "him", "himself", "his", "how",
    "i", "i'd", "i'll", "i'm", "i've", "if", "in", "into", "is", "isn",
    "isn't", "it", "it'd", "it'll", "it's", "its", "itself", "just", "ll",
    "m", "ma", "me", "mightn", "mightn't", "more", "most", "mustn",
    "mustn't", "my", "myself", "needn", "needn't", "no", "nor", "not", "now",
    "o", "of", "off", "on", "once", "only", "or", "other", "our", "ours",
    "ourselves", "out", "over", "own", "re", "s", "same", "shan", "shan't",
    "she", "she'd", "she'll", "she's", "should", "should've", "shouldn",
    "shouldn't", "so", "some", "such", "t", "than", "that", "that'll", "the",
    "their", "theirs", "them", "themselves", "then", "there", "these",
    "they", "they'd", "they'll", "they're", "they've", "this", "those",
    "through", "to", "too", "under", "until", "up", "ve", "very", "was",
    "wasn", "wasn't", "we", "we'd", "we'll", "we're", "we've", "were",
    "weren", "weren't", "what", "when", "where", "which", "while", "who",
    "whom", "why", "will", "with", "won", "won't", "wouldn", "wouldn't",
    "y", "you", "you'd", "you'll", "you're", "you've", "your", "yours",
    "yourself", "yourselves",
])

# Default corpus-specific list for consumer-health text.
DOMAIN_STOPWORDS: frozenset[str] = frozenset(["test", "doctor", "symptom", "physician"])


@dataclass(frozen=True)
class RawDocument:
    """One input document; ``id`` is opaque and unique within a corpus."""

    id: str
    text: str


@dataclass
class StopwordSet:
    """General-English plus corpus-specific stopwords; filtering uses the union."""

    general: frozenset[str] = ENGLISH_STOPWORDS
    domain: frozenset[str] = DOMAIN_STOPWORDS

    def union(self) -> frozenset[str]:
        return self.general | self.domain


@dataclass
class TokenStream:
    """Concatenated per-document token lists.

    ``doc_boundaries[i]`` is the index where document i starts; document i
    spans ``tokens[doc_boundaries[i]:doc_boundaries[i+1]]``. A document that
    normalizes to nothing keeps its (empty) slot so document count survives
    round-trips; boundaries are therefore non-decreasing, and strictly
    increasing whenever no document came out empty.
    """

    tokens: list[str] = field(default_factory=list)
    doc_boundaries: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.tokens and not self.doc_boundaries:
            self.doc_boundaries = [0]

    @property
    def n_documents(self) -> int:
        return len(self.doc_boundaries)

    def document_spans(self) -> Iterator[tuple[int, int]]:
        """Yield (start, end) index pairs, one per document."""
        for i, start in enumerate(self.doc_boundaries):
            end = (
                self.doc_boundaries[i + 1]
                if i + 1 < len(self.doc_boundaries)
                else len(self.tokens)
            )
            yield start, end

    def documents(self) -> Iterator[list[str]]:
        for start, end in self.document_spans():
            yield self.tokens[start:end]

    def validate(self) -> None:
        if self.doc_boundaries:
            if self.doc_boundaries[0] != 0:
                raise CorpusError("first document boundary must be 0")
            prev = -1
            for b in self.doc_boundaries:
                if b < prev:
                    raise CorpusError("document boundaries must be non-decreasing")
                prev = b
            if prev > len(self.tokens):
                raise CorpusError("document boundary past end of stream")
        elif self.tokens:
            raise CorpusError("non-empty stream needs at least one boundary")


def tokenize(doc: "RawDocument | str") -> list[str]:
    """Split on whitespace, strip leading/trailing punctuation, lowercase.

    Internal underscores (and any internal punctuation such as apostrophes)
    survive, so multi-word lemmas like ``pig_out`` stay one token.

    >>> tokenize("I had a Headache!")
    ['i', 'had', 'a', 'headache']
    >>> tokenize("pig_out, twice")
    ['pig_out', 'twice']
    """
    text = doc.text if isinstance(doc, RawDocument) else doc
    out = []
    for piece in text.split():
        start, end = 0, len(piece)
        while start < end and not (piece[start].isalnum() or piece[start] == "_"):
            start += 1
        while end > start and not (piece[end - 1].isalnum() or piece[end - 1] == "_"):
            end -= 1
        if start < end:
            out.append(piece[start:end].lower())
    return out


def normalize(
    tokens: Sequence[str],
    stopwords: StopwordSet | None = None,
    min_len: int = 3,
) -> list[str]:
    """Drop stopwords, letter-free tokens, and tokens shorter than ``min_len``.

    >>> normalize(["i", "had", "a", "headache"])
    ['headache']
    >>> normalize(["ok", "123", "!!"])
    []
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    drop = (stopwords or StopwordSet()).union()
    return [
        t
        for t in tokens
        if t not in drop and len(t) >= min_len and any(c.isalpha() for c in t)
    ]


def preprocess_corpus(
    docs: Iterable[RawDocument],
    stopwords: StopwordSet | None = None,
    min_len: int = 3,
) -> TokenStream:
    """tokenize -> normalize -> stem each document; concatenate with boundaries."""
    stream = TokenStream()
    for doc in docs:
        cleaned = normalize(tokenize(doc), stopwords, min_len)
        stream.doc_boundaries.append(len(stream.tokens))
        stream.tokens.extend(stem(t) for t in cleaned)
    stream.validate()
    return stream


def read_corpus(path: "str | Path") -> Iterator[RawDocument]:
    """Yield documents from a file (one per line) or a directory of .txt files."""
    path = Path(path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.suffix == ".txt")
        if not files:
            raise CorpusError(f"no .txt files under {path}")
        for p in files:
            yield _decode_document(p.name, p.read_bytes())
    elif path.is_file():
        with open(path, "rb") as fh:
            for lineno, raw in enumerate(fh, start=1):
                yield _decode_document(f"{path.name}:{lineno}", raw.rstrip(b"\r\n"))
    else:
        raise CorpusError(f"corpus path not found: {path}")


def _decode_document(doc_id: str, raw: bytes) -> RawDocument:
    try:
        return RawDocument(id=doc_id, text=raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise CorpusError(f"document {doc_id} is not valid UTF-8: {exc}") from None


def load_stopword_file(path: "str | Path") -> frozenset[str]:
    """One word per line; blank lines ignored; entries lowercased."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def write_token_stream(stream: TokenStream, path: "str | Path", config: "dict | None" = None) -> None:
    """Space-separated tokens, one document per line; config echo in a sidecar."""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        for doc in stream.documents():
            fh.write(" ".join(doc))
            fh.write("\n")
    if config is not None:
        sidecar = path.with_name(path.name + ".meta.json")
        sidecar.write_text(json.dumps({"config": config}, indent=2, sort_keys=True) + "\n")


def read_token_stream(path: "str | Path") -> TokenStream:
    stream = TokenStream()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            stream.doc_boundaries.append(len(stream.tokens))
            line = line.rstrip("\n")
            if line:
                stream.tokens.extend(line.split(" "))
    stream.validate()
    return stream
