"""Lexicon-based positive/negative/neutral classification of Hindi reviews."""

__version__ = "0.1.0"

from .text_core import (Document, Sentence, Token, make_document, normalize,
                        split_sentences, tokenize)
from .tagged_input import (TagCode, TaggedCorpusRecord, fallback_tag,
                           parse_tagged_line, read_tagged_corpus)
from .lexicon import (Conflict, Lexicon, LexiconEntry, Polarity, RelationDictionary,
                      Resolved, Unknown, expand_lexicon, load_dictionary, load_seed,
                      resolve)
from .classifier import (ClassifiedUnit, ClassifierConfig, Label, OpinionHit,
                         apply_negation, classify_document, classify_sentence,
                         extract_opinion_hits, summarize, vote)
from .evaluation import (ConfusionMatrix, Metrics, build_confusion, compute_metrics,
                         evaluate_run)
