"""Opinion-word extraction, negation, and majority-vote polarity."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .lexicon import (DEFAULT_MAX_DEPTH, Lexicon, Polarity, RelationDictionary,
                      Resolved, Resolver)
from .text_core import Document, Sentence, Token
from .tagged_input import TagCode

# coordinating conjunctions that close a clause for the clause negation scope
DEFAULT_CLAUSE_MARKERS = frozenset({
    "और", "तथा", "एवं", "लेकिन", "परंतु", "परन्तु", "किंतु", "किन्तु", "मगर", "या",
})
CANDIDATE_TAGS = frozenset({TagCode.JJ, TagCode.RB})


class Label(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @classmethod
    def parse(cls, value: str) -> "Label":
        v = value.strip().lower()
        for label in cls:
            if v in (label.value, label.value[:3]):
                return label
        raise ValueError(f"bad label {value!r}")

    def swapped(self) -> "Label":
        return {Label.POSITIVE: Label.NEGATIVE,
                Label.NEGATIVE: Label.POSITIVE}.get(self, self)


class NegationScope(str, enum.Enum):
    POST = "post"
    CLAUSE = "clause"


@dataclass(frozen=True)
class ClassifierConfig:
    negation_window: int = 3
    negation_scope: NegationScope = NegationScope.POST
    max_depth: int = DEFAULT_MAX_DEPTH
    # None: filter a sentence by POS only if one of its tokens is tagged
    pos_filter: Optional[bool] = None
    clause_markers: frozenset[str] = DEFAULT_CLAUSE_MARKERS

    def __post_init__(self):
        if self.negation_window < 1:
            raise ValueError("negation_window must be >= 1")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        object.__setattr__(self, "negation_scope", NegationScope(self.negation_scope))


@dataclass(frozen=True)
class OpinionHit:
    token_index: int
    word: str
    base_polarity: Polarity
    negated: bool = False

    @property
    def effective_polarity(self) -> Polarity:
        return -self.base_polarity if self.negated else self.base_polarity

    def as_dict(self) -> dict:
        return {"word": self.word, "base": int(self.base_polarity),
                "negated": self.negated, "effective": int(self.effective_polarity),
                "token_index": self.token_index}


@dataclass(frozen=True)
class ClassifiedUnit:
    label: Label
    positive_count: int
    negative_count: int
    hits: tuple[OpinionHit, ...] = ()

    def as_dict(self) -> dict:
        return {"label": self.label.value,
                "positive_count": self.positive_count,
                "negative_count": self.negative_count,
                "hits": [h.as_dict() for h in self.hits]}


@dataclass(frozen=True)
class DocumentResult:
    unit: ClassifiedUnit
    sentences: tuple[ClassifiedUnit, ...] = field(default=())


def extract_opinion_hits(tokens: Sequence[Token], lex: Lexicon,
                         dictionary: RelationDictionary | None = None,
                         pos_filter_enabled: bool = False,
                         max_depth: int = DEFAULT_MAX_DEPTH,
                         resolver: Resolver | None = None) -> list[OpinionHit]:
    """Find opinion words in one sentence's tokens.

    Direct lexicon members are always hits. Other tokens are resolved
    through `dictionary`; with POS filtering on, a tagged token is only
    resolved when tagged JJ or RB. Negators never become hits.
    """
    if resolver is None and dictionary is not None:
        resolver = Resolver(lex, dictionary, max_depth)
    hits = []
    for i, tok in enumerate(tokens):
        if tok.is_negator:
            continue
        pol = lex.polarity(tok.surface)
        if pol is None and resolver is not None:
            if pos_filter_enabled and tok.pos_tag is not None \
                    and tok.pos_tag not in CANDIDATE_TAGS:
                continue
            out = resolver(tok.surface)
            if isinstance(out, Resolved):
                pol = out.polarity
        if pol is not None:
            hits.append(OpinionHit(i, tok.surface, pol))
    return hits


def _clause_ids(tokens: Sequence[Token], markers: Iterable[str]) -> list[int]:
    markers = frozenset(markers)
    ids, cid, prev = [], 0, None
    for tok in tokens:
        if prev is not None and tok.clause != prev:
            cid += 1
        prev = tok.clause
        if tok.surface in markers:
            cid += 1
            ids.append(-1)  # the marker itself belongs to no clause
            continue
        ids.append(cid)
    return ids


def apply_negation(hits: Sequence[OpinionHit], tokens: Sequence[Token],
                   window: int = 3, scope: NegationScope | str = NegationScope.POST,
                   clause_markers: Iterable[str] = DEFAULT_CLAUSE_MARKERS,
                   ) -> list[OpinionHit]:
    """Flip hits under negation.

    ``post``: one flip per negator after the hit, up to and including the
    `window`-th following non-negator token. Negators do not use up the
    window, so a run of them never pushes other tokens out of range.
    ``clause``: one flip if the clause holding the hit has an odd number of
    negators. Clauses are delimited by commas and by `clause_markers`.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    scope = NegationScope(scope)
    if scope is NegationScope.POST:
        def flips(h):
            count = seen = 0
            for t in tokens[h.token_index + 1:]:
                if t.is_negator:
                    count += 1
                else:
                    seen += 1
                    if seen == window:
                        break
            return count
    else:
        ids = _clause_ids(tokens, clause_markers)
        per_clause = Counter(c for c, t in zip(ids, tokens) if t.is_negator)

        def flips(h):
            return per_clause[ids[h.token_index]]
    return [replace(h, negated=flips(h) % 2 == 1) for h in hits]


def vote(hits: Iterable[OpinionHit]) -> ClassifiedUnit:
    hits = tuple(hits)
    pos = sum(h.effective_polarity > 0 for h in hits)
    neg = len(hits) - pos
    if pos > neg:
        label = Label.POSITIVE
    elif neg > pos:
        label = Label.NEGATIVE
    else:
        label = Label.NEUTRAL
    return ClassifiedUnit(label, pos, neg, hits)


def _pos_filter_for(tokens: Sequence[Token], config: ClassifierConfig) -> bool:
    if config.pos_filter is None:
        return any(t.pos_tag is not None for t in tokens)
    return config.pos_filter


def classify_tokens(tokens: Sequence[Token], lex: Lexicon,
                    dictionary: RelationDictionary | None = None,
                    config: ClassifierConfig = ClassifierConfig(),
                    resolver: Resolver | None = None) -> ClassifiedUnit:
    hits = extract_opinion_hits(tokens, lex, dictionary,
                                _pos_filter_for(tokens, config),
                                config.max_depth, resolver)
    hits = apply_negation(hits, tokens, config.negation_window,
                          config.negation_scope, config.clause_markers)
    return vote(hits)


def classify_sentence(sentence: Sentence, lex: Lexicon,
                      dictionary: RelationDictionary | None = None,
                      config: ClassifierConfig = ClassifierConfig(),
                      resolver: Resolver | None = None) -> ClassifiedUnit:
    return classify_tokens(sentence.tokens, lex, dictionary, config, resolver)


def classify_document(document: Document, lex: Lexicon,
                      dictionary: RelationDictionary | None = None,
                      config: ClassifierConfig = ClassifierConfig(),
                      resolver: Resolver | None = None) -> DocumentResult:
    """Classify each sentence, then vote over all of the document's hits.

    Document-level hit indices count tokens across the whole document.
    """
    if resolver is None and dictionary is not None:
        resolver = Resolver(lex, dictionary, config.max_depth)
    units, all_hits, base = [], [], 0
    for s in document.sentences:
        unit = classify_sentence(s, lex, dictionary, config, resolver)
        units.append(unit)
        all_hits.extend(replace(h, token_index=h.token_index + base) for h in unit.hits)
        base += len(s.tokens)
    return DocumentResult(vote(all_hits), tuple(units))


def summarize(units: Iterable[ClassifiedUnit | Label]) -> tuple[int, int, int]:
    """(positive, negative, neutral) counts."""
    c = Counter(u if isinstance(u, Label) else u.label for u in units)
    return c[Label.POSITIVE], c[Label.NEGATIVE], c[Label.NEUTRAL]
