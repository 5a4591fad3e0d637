"""
Classifying review sentences
============================

Load the bundled seed list and relation dictionary, then label a few review
sentences as positive, negative or neutral by counting opinion words.
"""

from pathlib import Path

import hindi_polarity
from hindi_polarity import classify_document, load_dictionary, load_seed, make_document

data = Path(hindi_polarity.__file__).parent / "data"
seed = load_seed(data / "seed.tsv")
dictionary = load_dictionary(data / "dictionary.tsv")
print(f"{len(seed)} seed words, {len(dictionary)} dictionary headwords")

###############################################################################
# Each review becomes a Document: normalized text, sentence spans, tokens.
reviews = [
    "यह मोबाइल फोन अच्छा है |",
    "इस होटल का खाना खराब है |",
    "मैं सुबह घूमने जाता हूँ |",
]
for i, text in enumerate(reviews):
    doc = make_document(str(i), text)
    result = classify_document(doc, seed, dictionary)
    words = [h.word for h in result.unit.hits]
    print(f"{result.unit.label.value:>8}  {doc.raw_text}  opinion words: {words}")

###############################################################################
# Words outside the seed list are looked up through the dictionary.
# "उम्दा" -> "बढ़िया" -> "अच्छा" takes two synonym hops.
doc = make_document("x", "गाना उम्दा है।")
print(classify_document(doc, seed, dictionary).unit)
