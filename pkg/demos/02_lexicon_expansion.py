"""
Growing the seed list
=====================

Words reachable from the seed list through synonym edges keep the seed's
polarity; every antonym edge on the way flips it. The shallowest match wins,
and words whose shallowest matches disagree are set aside as conflicts.
"""

from hindi_polarity import Lexicon, RelationDictionary, expand_lexicon, resolve

seed = Lexicon.from_polarities({"अच्छा": +1, "खराब": -1})
dictionary = RelationDictionary.from_lists({
    "बढ़िया": (["अच्छा"], []),
    "बुरा": (["खराब"], ["अच्छा"]),
    "उम्दा": (["बढ़िया"], []),
    # reaches अच्छा at depth 2 both through a synonym and an antonym
    "अजीब": (["उम्दा"], ["बुरा"]),
})

for word in ["बढ़िया", "उम्दा", "बुरा", "अजीब", "फोन"]:
    print(f"{word:>8}: {resolve(word, seed, dictionary, max_depth=3)}")

###############################################################################
# expand_lexicon applies resolve to every headword and returns a new lexicon.
expansion = expand_lexicon(seed, dictionary)
for entry in expansion.lexicon.sorted_entries():
    print(entry.word, entry.polarity, entry.provenance.value, entry.depth)
print("conflicts:", sorted(expansion.conflicts))
print("unknown:", expansion.unknown)
