"""
Using POS tags
==============

Tagged text in ``word_TAG`` form can be classified directly. When tags are
present only adjectives and adverbs are looked up in the dictionary; words
already in the seed list count whatever their tag.
"""

from hindi_polarity import Lexicon, RelationDictionary, classify_document
from hindi_polarity.tagged_input import TaggedCorpusRecord, parse_tagged_line

seed = Lexicon.from_polarities({"अच्छा": 1})
dictionary = RelationDictionary.from_lists({"बढ़िया": (["अच्छा"], []),
                                             "फोन": (["अच्छा"], [])})

pairs = parse_tagged_line("यह_PRP फोन_NN बढ़िया_JJ है_VAUX ।_SYM")
record = TaggedCorpusRecord.from_pairs("r1", pairs)
print(record.to_line())

doc = record.to_document()
for tok in doc.sentences[0].tokens:
    print(tok.surface, tok.pos_tag.value)
print(classify_document(doc, seed, dictionary).unit)
