import unicodedata

import pytest
from hypothesis import given, strategies as st

from hindi_polarity.text_core import (DEFAULT_NEGATORS, DecodeError, decode,
                                      make_document, normalize, split_sentences,
                                      tokenize)

PARAGRAPH = ("न ही फिल्म का कॉन्सेप्ट नया है और न ही फिल्म में ज्यादा मजेदार कॉमेडी है। "
             "फिल्म में आयुष्मान और सोनम की खराब केमिस्ट्री देखने को मिली है। "
             "हां, आयुष्मान की ऋषि के साथ जबरदस्त केमिस्ट्री दिखी। "
             "फिल्म में कई खामियां हैं।")

hindi_text = st.text(
    alphabet=st.sampled_from(list("अआकखगघचछजटडतदनपबमयरलवसह्ािीुूेैोौंँ़") +
                             [" ", "\t", "।", "|", ",", "?", "!", "॥", "\"", "(", ")"]),
    max_size=60)


def test_normalize_collapses_space_and_rewrites_pipe():
    assert normalize("यह  मोबाइल फोन अच्छा है |") == "यह मोबाइल फोन अच्छा है ।"


def test_normalize_empty():
    assert normalize("") == ""


def test_pipe_inside_word_is_kept():
    assert normalize("a|b") == "a|b"
    assert normalize("a| b") == "a। b"


def test_normalize_nukta_matches_unicode_tables():
    # U+0958 is a composition exclusion, so the canonical composed form is
    # KA followed by NUKTA; both spellings must normalize identically.
    composed_ref = unicodedata.normalize("NFC", "क़")
    assert composed_ref == "क़"
    assert normalize("क़") == composed_ref
    assert normalize("क़") == composed_ref


def test_normalize_bytes_and_decode_error():
    assert normalize("अच्छा".encode()) == "अच्छा"
    data = "अ".encode() + b"\xff" + "ब".encode()
    with pytest.raises(DecodeError) as exc:
        normalize(data)
    assert exc.value.offset == 3
    assert "byte offset 3" in str(exc.value)


def test_bom_is_stripped():
    assert decode(b"\xef\xbb\xbf" + "है".encode()) == "है"


@given(hindi_text)
def test_normalize_idempotent(s):
    assert normalize(normalize(s)) == normalize(s)


def test_split_single():
    assert split_sentences("यह मोबाइल फोन अच्छा है ।") == [(0, 24)]


def test_split_paragraph_four_sentences():
    assert len(split_sentences(normalize(PARAGRAPH))) == 4


def test_split_trailing_fragment():
    text = "अ। ब। स"
    assert [text[a:b] for a, b in split_sentences(text)] == ["अ।", "ब।", "स"]


def test_split_punctuation_runs():
    text = "क्या?! हाँ ।।"
    assert [text[a:b] for a, b in split_sentences(text)] == ["क्या?!", "हाँ ।।"]
    assert split_sentences("   ") == []


@given(hindi_text)
def test_split_reconstructs_input(s):
    text = normalize(s)
    spans = split_sentences(text)
    pos = 0
    for a, b in spans:
        assert a >= pos and b > a
        assert text[pos:a].strip() == ""
        pos = b
    assert text[pos:].strip() == ""


def test_tokenize_negator():
    toks = tokenize("अच्छा नहीं")
    assert [(t.surface, t.is_negator) for t in toks] == [("अच्छा", False), ("नहीं", True)]
    assert [t.offset for t in toks] == [0, 6]


def test_tokenize_strips_terminator():
    assert [t.surface for t in tokenize("है।")] == ["है"]


def test_tokenize_comma_is_separator_and_clause_break():
    toks = tokenize("फिल्म, कॉमेडी")
    assert [t.surface for t in toks] == ["फिल्म", "कॉमेडी"]
    assert [t.clause for t in toks] == [0, 1]
    assert [t.surface for t in tokenize("(अच्छा) \"फिल्म\"")] == ["अच्छा", "फिल्म"]


def test_tokenize_custom_negators():
    toks = tokenize("अच्छा नहीं", negators={"x"})
    assert not any(t.is_negator for t in toks)


def test_latin_and_digits_are_tokens():
    assert [t.surface for t in tokenize("फोन 24 MP है")] == ["फोन", "24", "MP", "है"]


@given(hindi_text)
def test_token_properties(s):
    text = normalize(s)
    toks = tokenize(text)
    offsets = [t.offset for t in toks]
    assert offsets == sorted(set(offsets))
    for t in toks:
        assert t.surface and not any(c.isspace() for c in t.surface)
        assert not set(t.surface) & set("।॥?!")
        assert text[t.offset:t.offset + len(t.surface)] == t.surface
        assert t.is_negator == (t.surface in DEFAULT_NEGATORS)
    again = tokenize(" ".join(t.surface for t in toks))
    assert [(t.surface, t.is_negator) for t in again] == [(t.surface, t.is_negator) for t in toks]


def test_make_document_spans_and_offsets():
    doc = make_document("d", PARAGRAPH)
    assert doc.raw_text == normalize(PARAGRAPH)
    prev_end = 0
    for i, s in enumerate(doc.sentences):
        assert prev_end <= s.start < s.end <= len(doc.raw_text)
        prev_end = s.end
        text = doc.sentence_text(i)
        for t in s.tokens:
            assert text[t.offset:].startswith(t.surface)
    assert doc.sentences[2].tokens[0].surface == "हां"
