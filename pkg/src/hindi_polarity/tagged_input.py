"""Reader for ``word_TAG`` tagged text and a dictionary-based fallback tagger.

Reviews tagged by an external Hindi POS tagger are read from lines such as::

    review-1<TAB>यह_PRP फोन_NN अच्छा_JJ है_VM ।_SYM

Only a coarse tagset is kept; any tag outside it becomes ``OTHER``.
"""

from __future__ import annotations

import bisect
import enum
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .text_core import (DEFAULT_NEGATORS, TERMINATORS, Document, Sentence,
                        Token, normalize, read_text, tokenize)


class TagCode(str, enum.Enum):
    NN = "NN"
    NNP = "NNP"
    JJ = "JJ"
    RB = "RB"
    VM = "VM"
    VAUX = "VAUX"
    PRP = "PRP"
    PSP = "PSP"
    NEG = "NEG"
    QT = "QT"
    OTHER = "OTHER"

    @classmethod
    def lookup(cls, code: str) -> "TagCode":
        try:
            return cls(code.strip().upper())
        except ValueError:
            return cls.OTHER


class TaggedFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.column = column


TaggedPair = tuple[str, TagCode]

_FIELD_RE = re.compile(r"\S+")
# a '_' that is not preceded by an odd number of backslashes
_SEP_RE = re.compile(r"(?<!\\)(?:\\\\)*_")
_ESC_RE = re.compile(r"\\([\\_])")
_SENTENCE_END = TERMINATORS | {"|"}


def _unescape(s: str) -> str:
    return _ESC_RE.sub(r"\1", s)


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace("_", "\\_")


def parse_tagged_line(line: str, lineno: int | None = None) -> list[TaggedPair]:
    """Parse whitespace-separated ``surface_TAG`` fields.

    The last unescaped underscore separates surface from tag; ``\\_`` and
    ``\\\\`` are escapes inside the surface. A field with no separator gets
    ``OTHER``.

    >>> parse_tagged_line("अच्छा_JJ है_VM")
    [('अच्छा', <TagCode.JJ: 'JJ'>), ('है', <TagCode.VM: 'VM'>)]
    """
    pairs = []
    for m in _FIELD_RE.finditer(line):
        fld = m.group()
        seps = list(_SEP_RE.finditer(fld))
        if not seps:
            pairs.append((_unescape(fld), TagCode.OTHER))
            continue
        cut = seps[-1].end() - 1
        surface, tag = fld[:cut], fld[cut + 1:]
        if not tag:
            raise TaggedFormatError(f"empty tag in {fld!r}", lineno, m.start() + 1)
        if not surface:
            raise TaggedFormatError(f"empty surface in {fld!r}", lineno, m.start() + 1)
        pairs.append((_unescape(surface), TagCode.lookup(tag)))
    return pairs


def format_tagged_line(pairs: Iterable[TaggedPair]) -> str:
    return " ".join(f"{_escape(w)}_{TagCode(t).value}" for w, t in pairs)


@dataclass(frozen=True)
class TaggedCorpusRecord:
    id: str
    sentences: tuple[tuple[TaggedPair, ...], ...]

    @classmethod
    def from_pairs(cls, record_id: str, pairs: Sequence[TaggedPair]):
        sentences, current = [], []
        for surface, tag in pairs:
            current.append((surface, tag))
            if surface[-1] in _SENTENCE_END:
                sentences.append(tuple(current))
                current = []
        if current:
            sentences.append(tuple(current))
        return cls(record_id, tuple(sentences))

    @property
    def pairs(self) -> list[TaggedPair]:
        return [p for s in self.sentences for p in s]

    def to_line(self) -> str:
        return f"{self.id}\t{format_tagged_line(self.pairs)}"

    def to_document(self, negators: Iterable[str] = DEFAULT_NEGATORS) -> Document:
        """Build a tokenized document whose tokens carry the record's tags.

        Surfaces are re-tokenized (punctuation-only surfaces vanish); every
        resulting token inherits the tag of the surface it came from.
        """
        negators = frozenset(negators)
        sentences = []
        parts = []
        pos = 0
        for group in self.sentences:
            starts, tags, words = [], [], []
            offset = 0
            for surface, tag in group:
                word = normalize(surface)
                starts.append(offset)
                words.append(word)
                tags.append(tag)
                offset += len(word) + 1
            text = " ".join(words)
            tokens = []
            for tok in tokenize(text, negators):
                tag = tags[bisect.bisect_right(starts, tok.offset) - 1]
                tokens.append(replace(tok, pos_tag=TagCode.NEG if tok.is_negator else tag))
            if parts:
                pos += 1
            sentences.append(Sentence(pos, pos + len(text), tuple(tokens)))
            parts.append(text)
            pos += len(text)
        return Document(self.id, " ".join(parts), tuple(sentences))


def read_tagged_corpus(path: str | Path) -> list[TaggedCorpusRecord]:
    """Read ``id<TAB>word_TAG ...`` lines; blank and '#' lines are skipped."""
    records = []
    for lineno, line in enumerate(read_text(path).splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        rid, sep, body = line.partition("\t")
        if not sep:
            raise TaggedFormatError("expected id<TAB>tokens", lineno, 1)
        pairs = parse_tagged_line(body, lineno)
        records.append(TaggedCorpusRecord.from_pairs(rid.strip(), pairs))
    return records


def load_tag_lexicon(path: str | Path) -> dict[str, TagCode]:
    """Read a ``word<TAB>TAG`` file into a lookup table."""
    table = {}
    for lineno, line in enumerate(read_text(path).splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2 or not cols[0].strip():
            raise TaggedFormatError("expected word<TAB>TAG", lineno)
        table[normalize(cols[0].strip())] = TagCode.lookup(cols[1])
    return table


def fallback_tag(tokens: Sequence[Token], tag_lexicon: Mapping[str, TagCode]) -> list[Token]:
    """Tag tokens by dictionary lookup; negators are always ``NEG``.

    Tokens missing from the lexicon keep whatever tag they had.
    """
    out = []
    for tok in tokens:
        if tok.is_negator:
            tag = TagCode.NEG
        else:
            tag = tag_lexicon.get(tok.surface, tok.pos_tag)
        out.append(replace(tok, pos_tag=tag))
    return out
