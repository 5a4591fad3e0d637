"""
Negation: post scope and clause scope
=====================================

By default a negator flips the opinion words just before it. The clause
scope flips every opinion word in a clause holding an odd number of
negators, which also catches negators placed before the word ("न ही ...").
"""

from hindi_polarity import ClassifierConfig, Lexicon, RelationDictionary
from hindi_polarity import classify_document, make_document

lex = Lexicon.from_polarities({"मजेदार": 1, "जबरदस्त": 1, "खराब": -1, "खामियां": -1,
                               "नया": 1, "अच्छा": 1})
no_dict = RelationDictionary()

doc = make_document("song", "अभिजीत यह गाना अच्छा नहीं गा पाये |")
print(classify_document(doc, lex, no_dict).unit.label)

###############################################################################
# A four-sentence movie review. Both scopes end up negative here, but for
# different reasons; compare the hit lists.
review = make_document("movie",
    "न ही फिल्म का कॉन्सेप्ट नया है और न ही फिल्म में ज्यादा मजेदार कॉमेडी है। "
    "फिल्म में आयुष्मान और सोनम की खराब केमिस्ट्री देखने को मिली है। "
    "हां, आयुष्मान की ऋषि के साथ जबरदस्त केमिस्ट्री दिखी। फिल्म में कई खामियां हैं।")

for scope in ("post", "clause"):
    res = classify_document(review, lex, no_dict, ClassifierConfig(negation_scope=scope))
    hits = [(h.word, int(h.effective_polarity)) for h in res.unit.hits]
    print(f"{scope:>6}: {res.unit.label.value}  {hits}")
