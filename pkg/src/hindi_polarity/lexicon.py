"""Seed polarity list, synonym/antonym dictionary, and lexicon growth.

A word missing from the seed list is resolved by walking the relation
dictionary breadth-first: a synonym edge keeps the sign, an antonym edge
flips it. The shallowest level at which seed words are reached decides.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Union

from .text_core import normalize, read_text

DEFAULT_MAX_DEPTH = 3


class Polarity(enum.IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    def __neg__(self) -> "Polarity":
        return Polarity(-int(self))

    def __str__(self) -> str:
        return "+1" if self > 0 else "-1"

    @classmethod
    def parse(cls, value: str) -> "Polarity":
        v = value.strip().lower()
        if v in ("+1", "1", "pos", "positive"):
            return cls.POSITIVE
        if v in ("-1", "neg", "negative"):
            return cls.NEGATIVE
        raise ValueError(f"bad polarity {value!r}")


class Provenance(str, enum.Enum):
    SEED = "seed"
    EXPANDED = "expanded"


class LexiconError(ValueError):
    """A seed list or dictionary file could not be loaded."""

    def __init__(self, message: str, line: int | None = None,
                 path: str | Path | None = None):
        prefix = ""
        if path is not None:
            prefix += f"{path}:"
        if line is not None:
            prefix += f"{line}:"
        super().__init__(f"{prefix} {message}" if prefix else message)
        self.line = line
        self.path = path


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    polarity: Polarity
    provenance: Provenance = Provenance.SEED
    depth: int = 0

    def __post_init__(self):
        if (self.depth == 0) != (self.provenance is Provenance.SEED):
            raise ValueError(f"{self.word}: depth 0 must coincide with seed provenance")


class Lexicon(Mapping[str, LexiconEntry]):
    """Immutable word -> LexiconEntry store."""

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self._entries: dict[str, LexiconEntry] = {}
        for e in entries:
            if e.word in self._entries:
                raise ValueError(f"duplicate lexicon word {e.word!r}")
            self._entries[e.word] = e

    @classmethod
    def from_polarities(cls, mapping: Mapping[str, int]) -> "Lexicon":
        return cls(LexiconEntry(normalize(w), Polarity(p)) for w, p in mapping.items())

    def __getitem__(self, word: str) -> LexiconEntry:
        return self._entries[word]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"Lexicon({len(self)} entries)"

    def polarity(self, word: str) -> Optional[Polarity]:
        e = self._entries.get(word)
        return e.polarity if e else None

    def negated(self) -> "Lexicon":
        return Lexicon(LexiconEntry(e.word, -e.polarity, e.provenance, e.depth)
                       for e in self._entries.values())

    def sorted_entries(self) -> list[LexiconEntry]:
        return [self._entries[w] for w in sorted(self._entries)]


@dataclass(frozen=True)
class Relations:
    synonyms: frozenset[str] = frozenset()
    antonyms: frozenset[str] = frozenset()


class RelationDictionary(Mapping[str, Relations]):
    """Headword -> synonyms and antonyms. Edges run from the headword only."""

    def __init__(self, entries: Mapping[str, Relations] | None = None):
        self._entries: dict[str, Relations] = {}
        for head, rel in (entries or {}).items():
            syn = frozenset(w for w in rel.synonyms if w and w != head)
            ant = frozenset(w for w in rel.antonyms if w and w != head)
            both = syn & ant
            if both:
                raise ValueError(f"{head!r}: {sorted(both)} listed as both synonym and antonym")
            self._entries[head] = Relations(syn, ant)

    @classmethod
    def from_lists(cls, mapping: Mapping[str, tuple[Iterable[str], Iterable[str]]]):
        return cls({normalize(h): Relations(frozenset(map(normalize, s)),
                                            frozenset(map(normalize, a)))
                    for h, (s, a) in mapping.items()})

    def __getitem__(self, word: str) -> Relations:
        return self._entries[word]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def edges(self, word: str) -> list[tuple[str, int]]:
        """Outgoing ``(neighbour, sign)`` pairs of `word`, sorted."""
        rel = self._entries.get(word)
        if rel is None:
            return []
        out = [(w, 1) for w in rel.synonyms] + [(w, -1) for w in rel.antonyms]
        return sorted(out)


@dataclass(frozen=True)
class Resolved:
    polarity: Polarity
    depth: int
    path: tuple[str, ...]


@dataclass(frozen=True)
class Unknown:
    pass


@dataclass(frozen=True)
class Conflict:
    depth: int
    positive_path: tuple[str, ...]
    negative_path: tuple[str, ...]


Outcome = Union[Resolved, Unknown, Conflict]
UNKNOWN = Unknown()


def _iter_tsv(path: str | Path) -> Iterator[tuple[int, list[str]]]:
    try:
        text = read_text(path)
    except UnicodeError as exc:
        raise LexiconError(str(exc), path=path) from None
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line.split("\t")


def load_seed(path: str | Path) -> Lexicon:
    """Load a ``word<TAB>polarity`` seed list.

    Polarity is one of ``+1``, ``-1``, ``pos``, ``neg``. Extra columns (as in
    an expanded-lexicon file) are ignored, so a saved expansion can be fed
    back as a seed list.
    """
    seen: dict[str, Polarity] = {}
    for lineno, cols in _iter_tsv(path):
        if len(cols) < 2 or not cols[0].strip():
            raise LexiconError("expected word<TAB>polarity", lineno, path)
        word = normalize(cols[0].strip())
        try:
            pol = Polarity.parse(cols[1])
        except ValueError as exc:
            raise LexiconError(str(exc), lineno, path) from None
        if seen.get(word, pol) != pol:
            raise LexiconError(f"conflicting polarity for {word!r}", lineno, path)
        seen[word] = pol
    return Lexicon(LexiconEntry(w, p) for w, p in seen.items())


def _split_list(cell: str) -> set[str]:
    return {normalize(w.strip()) for w in cell.split(",") if w.strip()}


def load_dictionary(path: str | Path) -> RelationDictionary:
    """Load ``word<TAB>syn1,syn2<TAB>ant1,ant2`` lines.

    Repeated headwords are merged. A word in both columns for one headword
    is an error.
    """
    syns: dict[str, set[str]] = {}
    ants: dict[str, set[str]] = {}
    for lineno, cols in _iter_tsv(path):
        if len(cols) > 3 or not cols[0].strip():
            raise LexiconError("expected word<TAB>synonyms<TAB>antonyms", lineno, path)
        cols += [""] * (3 - len(cols))
        head = normalize(cols[0].strip())
        s = syns.setdefault(head, set())
        a = ants.setdefault(head, set())
        s |= _split_list(cols[1])
        a |= _split_list(cols[2])
        both = (s & a) - {head}
        if both:
            raise LexiconError(
                f"{head!r}: {', '.join(sorted(both))} is both synonym and antonym",
                lineno, path)
    return RelationDictionary({h: Relations(frozenset(syns[h]), frozenset(ants[h]))
                               for h in syns})


def resolve(word: str, seed: Lexicon, dictionary: RelationDictionary,
            max_depth: int = DEFAULT_MAX_DEPTH) -> Outcome:
    """Resolve the polarity of `word` through the relation dictionary.

    Returns ``Resolved`` with the lexicographically smallest shortest path
    as witness, ``Conflict`` when seed words at the minimal depth disagree,
    and ``Unknown`` when no seed word is reachable within `max_depth` edges.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    hit = seed.get(word)
    if hit is not None:
        return Resolved(hit.polarity, 0, (word,))

    # frontier: (node, sign relative to word) -> smallest path reaching it
    frontier: dict[tuple[str, int], tuple[str, ...]] = {(word, 1): (word,)}
    visited = {word}
    for depth in range(1, max_depth + 1):
        nxt: dict[tuple[str, int], tuple[str, ...]] = {}
        for (node, sign), path in frontier.items():
            for nb, edge_sign in dictionary.edges(node):
                if nb in visited:
                    continue
                key = (nb, sign * edge_sign)
                cand = path + (nb,)
                if key not in nxt or cand < nxt[key]:
                    nxt[key] = cand
        if not nxt:
            return UNKNOWN
        best: dict[Polarity, tuple[str, ...]] = {}
        for (node, sign), path in nxt.items():
            pol = seed.polarity(node)
            if pol is None:
                continue
            pol = pol if sign > 0 else -pol
            if pol not in best or path < best[pol]:
                best[pol] = path
        if len(best) == 2:
            return Conflict(depth, best[Polarity.POSITIVE], best[Polarity.NEGATIVE])
        if best:
            (pol, path), = best.items()
            return Resolved(pol, depth, path)
        visited.update(node for node, _ in nxt)
        frontier = nxt
    return UNKNOWN


class Resolver:
    """Memoizing wrapper around :func:`resolve` for one lexicon/dictionary pair."""

    def __init__(self, seed: Lexicon, dictionary: RelationDictionary,
                 max_depth: int = DEFAULT_MAX_DEPTH):
        self.seed = seed
        self.dictionary = dictionary
        self.max_depth = max_depth
        self._cache: dict[str, Outcome] = {}

    def __call__(self, word: str) -> Outcome:
        try:
            return self._cache[word]
        except KeyError:
            out = self._cache[word] = resolve(word, self.seed, self.dictionary,
                                              self.max_depth)
            return out


@dataclass
class Expansion:
    lexicon: Lexicon
    conflicts: dict[str, Conflict] = field(default_factory=dict)
    unknown: list[str] = field(default_factory=list)

    @property
    def expanded_count(self) -> int:
        return sum(e.provenance is Provenance.EXPANDED for e in self.lexicon.values())


def expand_lexicon(seed: Lexicon, dictionary: RelationDictionary,
                   max_depth: int = DEFAULT_MAX_DEPTH) -> Expansion:
    """Add every resolvable dictionary headword to a copy of `seed`.

    Each headword is resolved against the original seed, so the result does
    not depend on dictionary order.
    """
    entries = list(seed.values())
    conflicts, unknown = {}, []
    for head in sorted(dictionary):
        if head in seed:
            continue
        out = resolve(head, seed, dictionary, max_depth)
        if isinstance(out, Resolved):
            entries.append(LexiconEntry(head, out.polarity, Provenance.EXPANDED, out.depth))
        elif isinstance(out, Conflict):
            conflicts[head] = out
        else:
            unknown.append(head)
    return Expansion(Lexicon(entries), conflicts, unknown)


def format_lexicon_tsv(lexicon: Lexicon) -> str:
    return "".join(f"{e.word}\t{e.polarity}\t{e.provenance.value}\t{e.depth}\n"
                   for e in lexicon.sorted_entries())


def format_conflicts_tsv(conflicts: Mapping[str, Conflict]) -> str:
    return "".join(f"{w}\t{'>'.join(c.positive_path)}\t{'>'.join(c.negative_path)}\n"
                   for w, c in sorted(conflicts.items()))
