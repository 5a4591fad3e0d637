"""Normalization, sentence splitting and tokenization for Devanagari text.

All offsets are in Python string indices (Unicode scalar values).
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

DANDA = "।"
DOUBLE_DANDA = "॥"
TERMINATORS = frozenset({DANDA, DOUBLE_DANDA, "?", "!"})

DEFAULT_NEGATORS = frozenset({"नहीं", "न", "मत", "ना"})

# characters that always separate tokens, in addition to whitespace
_SEPARATORS = "".join(sorted(TERMINATORS)) + ",|"
_CHUNK_RE = re.compile(r"[^\s" + re.escape(_SEPARATORS) + r"]+")
# stripped from token edges only
_EDGE_PUNCT = "\"'“”‘’()[]{}<>;:.…"

_WS_RE = re.compile(r"\s+")
_PIPE_RE = re.compile(r"\|(?=\s|$)")


class DecodeError(ValueError):
    """Input bytes are not valid UTF-8."""

    def __init__(self, offset: int, reason: str = "invalid UTF-8"):
        super().__init__(f"{reason} at byte offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Token:
    surface: str
    offset: int
    pos_tag: Optional[str] = None
    is_negator: bool = False
    clause: int = 0  # index of the comma-delimited clause inside the sentence


@dataclass(frozen=True)
class Sentence:
    start: int
    end: int
    tokens: tuple[Token, ...] = ()

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class Document:
    id: str
    raw_text: str
    sentences: tuple[Sentence, ...] = field(default=())

    def sentence_text(self, i: int) -> str:
        s = self.sentences[i]
        return self.raw_text[s.start:s.end]


def decode(data: bytes) -> str:
    """Decode UTF-8 bytes, dropping a leading BOM."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(exc.start, exc.reason) from None
    return text[1:] if text.startswith("﻿") else text


def read_text(path: str | Path) -> str:
    return decode(Path(path).read_bytes())


def normalize(text: str | bytes) -> str:
    """Return the NFC form of `text` with whitespace runs collapsed.

    A pipe that ends a clause (followed by whitespace or end of text) is
    rewritten to a danda. Bytes input is decoded as UTF-8 first.

    >>> normalize("यह  मोबाइल फोन अच्छा है |")
    'यह मोबाइल फोन अच्छा है ।'
    """
    if isinstance(text, (bytes, bytearray)):
        text = decode(bytes(text))
    text = unicodedata.normalize("NFC", text)
    text = _WS_RE.sub(" ", text)
    return _PIPE_RE.sub(DANDA, text)


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Split normalized text into sentence spans ``(start, end)``.

    A terminator (and any terminators directly following it) belongs to the
    sentence before it. Leading/trailing whitespace is excluded from spans.
    A fragment made only of terminators is merged into the previous sentence.
    """
    spans: list[tuple[int, int]] = []
    n = len(text)
    i = 0
    while i < n:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        start = i
        while i < n and text[i] not in TERMINATORS:
            i += 1
        while i < n and text[i] in TERMINATORS:
            i += 1
        end = i
        while end > start and text[end - 1].isspace():
            end -= 1
        if spans and all(c in TERMINATORS or c.isspace() for c in text[start:end]):
            spans[-1] = (spans[-1][0], end)
        else:
            spans.append((start, end))
    return spans


def tokenize(sentence_text: str,
             negators: Iterable[str] = DEFAULT_NEGATORS) -> list[Token]:
    """Split a sentence on whitespace and punctuation into tokens.

    Terminators, commas and pipes always separate tokens; quotes, brackets
    and a few other marks are stripped from token edges. Each comma starts
    a new clause.
    """
    negators = frozenset(negators)
    tokens = []
    clause = 0
    last = 0
    for m in _CHUNK_RE.finditer(sentence_text):
        clause += sentence_text.count(",", last, m.start())
        last = m.end()
        chunk = m.group()
        stripped = chunk.lstrip(_EDGE_PUNCT)
        lead = len(chunk) - len(stripped)
        stripped = stripped.rstrip(_EDGE_PUNCT)
        if not stripped:
            continue
        tokens.append(Token(stripped, m.start() + lead,
                            is_negator=stripped in negators, clause=clause))
    return tokens


def make_document(doc_id: str, raw_text: str | bytes,
                  negators: Iterable[str] = DEFAULT_NEGATORS) -> Document:
    """Normalize, sentence-split and tokenize a review."""
    text = normalize(raw_text)
    negators = frozenset(negators)
    sentences = tuple(
        Sentence(start, end, tuple(tokenize(text[start:end], negators)))
        for start, end in split_sentences(text))
    return Document(doc_id, text, sentences)


def load_word_list(path: str | Path) -> frozenset[str]:
    """Read one word per line; blank and '#' lines are skipped."""
    words = set()
    for line in read_text(path).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(normalize(line))
    return frozenset(words)
