import random

import pytest
from hypothesis import given, settings, strategies as st

from hindi_polarity.lexicon import (Conflict, Lexicon, LexiconEntry, LexiconError,
                                    Polarity, Provenance, RelationDictionary, Resolved,
                                    Resolver, Unknown, expand_lexicon, format_conflicts_tsv,
                                    format_lexicon_tsv, load_dictionary, load_seed, resolve)

from oracles import brute_resolve, random_graph


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def dict_of(**kw):
    return RelationDictionary.from_lists({k: v for k, v in kw.items()})


def test_load_seed(tmp_path):
    lex = load_seed(write(tmp_path, "s.tsv", "# seed\nअच्छा\t+1\nखराब\t-1\n"))
    assert len(lex) == 2
    assert lex["अच्छा"] == LexiconEntry("अच्छा", Polarity.POSITIVE, Provenance.SEED, 0)
    assert lex.polarity("खराब") is Polarity.NEGATIVE
    assert len(load_seed(write(tmp_path, "e.tsv", ""))) == 0
    assert len(load_seed(write(tmp_path, "d.tsv", "अच्छा\t+1\nअच्छा\tpos\n"))) == 1


def test_load_seed_errors(tmp_path):
    with pytest.raises(LexiconError) as exc:
        load_seed(write(tmp_path, "s.tsv", "अच्छा\t+1\nअच्छा\tneg\n"))
    assert "अच्छा" in str(exc.value) and exc.value.line == 2
    with pytest.raises(LexiconError) as exc:
        load_seed(write(tmp_path, "m.tsv", "अच्छा\t+1\n\nखराब\n"))
    assert exc.value.line == 3
    with pytest.raises(LexiconError):
        load_seed(write(tmp_path, "p.tsv", "अच्छा\tgood\n"))


def test_load_dictionary(tmp_path):
    d = load_dictionary(write(tmp_path, "d.tsv", "बढ़िया\tअच्छा\t\nबुरा\t\tअच्छा\n"))
    assert d["बढ़िया"].synonyms == {"अच्छा"} and not d["बढ़िया"].antonyms
    assert d["बुरा"].antonyms == {"अच्छा"} and not d["बुरा"].synonyms
    assert len(load_dictionary(write(tmp_path, "e.tsv", ""))) == 0


def test_load_dictionary_drops_headword_and_rejects_overlap(tmp_path):
    d = load_dictionary(write(tmp_path, "d.tsv", "अ\tअ,ब\n"))
    assert d["अ"].synonyms == {"ब"}
    with pytest.raises(LexiconError) as exc:
        load_dictionary(write(tmp_path, "x.tsv", "अ\tब\tब\n"))
    assert exc.value.line == 1


def test_entry_invariant():
    with pytest.raises(ValueError):
        LexiconEntry("x", Polarity.POSITIVE, Provenance.EXPANDED, 0)
    with pytest.raises(ValueError):
        Lexicon([LexiconEntry("x", Polarity.POSITIVE), LexiconEntry("x", Polarity.NEGATIVE)])


SEED = Lexicon.from_polarities({"अच्छा": 1})


def test_resolve_direct_hit():
    assert resolve("अच्छा", SEED, RelationDictionary()) == Resolved(Polarity.POSITIVE, 0, ("अच्छा",))


def test_resolve_synonym():
    out = resolve("बढ़िया", SEED, dict_of(बढ़िया=(["अच्छा"], [])))
    assert out == Resolved(Polarity.POSITIVE, 1, ("बढ़िया", "अच्छा"))


def test_resolve_antonym_flips():
    out = resolve("बुरा", SEED, dict_of(बुरा=([], ["अच्छा"])))
    assert out == Resolved(Polarity.NEGATIVE, 1, ("बुरा", "अच्छा"))


def test_resolve_unknown():
    assert isinstance(resolve("xyz", SEED, RelationDictionary()), Unknown)
    with pytest.raises(ValueError):
        resolve("xyz", SEED, RelationDictionary(), max_depth=0)


def test_resolve_depth_limit():
    d = dict_of(a=(["b"], []), b=(["c"], []), c=(["अच्छा"], []))
    assert resolve("a", SEED, d, max_depth=3).depth == 3
    assert isinstance(resolve("a", SEED, d, max_depth=2), Unknown)


DIAMOND = dict_of(w=(["x"], ["y"]), x=(["अच्छा"], []), y=(["अच्छा"], []))


def test_diamond_conflict():
    out = resolve("w", SEED, DIAMOND)
    assert out == Conflict(2, ("w", "x", "अच्छा"), ("w", "y", "अच्छा"))
    exp = expand_lexicon(SEED, DIAMOND)
    assert "w" not in exp.lexicon and "w" in exp.conflicts
    assert exp.lexicon["x"].depth == 1 and exp.lexicon["y"].polarity is Polarity.POSITIVE
    assert format_conflicts_tsv(exp.conflicts) == "w\tw>x>अच्छा\tw>y>अच्छा\n"


def test_shallower_seed_wins():
    d = dict_of(w=(["s2", "m"], []), m=([], ["अच्छा"]))
    seed = Lexicon.from_polarities({"अच्छा": 1, "s2": 1})
    assert resolve("w", seed, d) == Resolved(Polarity.POSITIVE, 1, ("w", "s2"))


def test_lexicographic_witness():
    d = dict_of(w=(["ग", "क"], []), ग=(["अच्छा"], []), क=(["अच्छा"], []))
    assert resolve("w", SEED, d).path == ("w", "क", "अच्छा")


def test_expand_lexicon():
    exp = expand_lexicon(SEED, dict_of(बढ़िया=(["अच्छा"], [])))
    assert dict(exp.lexicon) == {
        "अच्छा": LexiconEntry("अच्छा", Polarity.POSITIVE),
        "बढ़िया": LexiconEntry("बढ़िया", Polarity.POSITIVE, Provenance.EXPANDED, 1)}
    assert exp.expanded_count == 1
    assert dict(expand_lexicon(SEED, RelationDictionary()).lexicon) == dict(SEED)
    assert len(SEED) == 1  # input untouched


def test_expand_reports_unknown():
    exp = expand_lexicon(SEED, dict_of(p=(["q"], [])))
    assert exp.unknown == ["p"] and exp.expanded_count == 0


def test_format_lexicon_sorted():
    exp = expand_lexicon(SEED, dict_of(बढ़िया=(["अच्छा"], []), बुरा=([], ["अच्छा"])))
    lines = format_lexicon_tsv(exp.lexicon).splitlines()
    assert lines == sorted(lines)
    assert "बुरा\t-1\texpanded\t1" in lines


def test_resolver_cache_matches():
    r = Resolver(SEED, DIAMOND)
    for w in ["w", "x", "y", "zz", "w"]:
        assert r(w) == resolve(w, SEED, DIAMOND)


def to_library(edges, seed):
    d = RelationDictionary.from_lists({
        u: ([v for v, s in es if s > 0], [v for v, s in es if s < 0]) for u, es in edges.items()})
    return d, Lexicon.from_polarities(seed)


def outcome_tuple(out):
    if isinstance(out, Resolved):
        return ("resolved", int(out.polarity), out.depth, out.path)
    if isinstance(out, Conflict):
        return ("conflict", out.depth, out.positive_path, out.negative_path)
    return ("unknown",)


def test_against_brute_force_small():
    rng = random.Random(1)
    for _ in range(100):
        words, edges, seed = random_graph(rng)
        d, lex = to_library(edges, seed)
        depth = rng.randint(1, 4)
        for w in words:
            assert outcome_tuple(resolve(w, lex, d, depth)) == brute_resolve(w, seed, edges, depth)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_witness_replays_sign(rng):
    words, edges, seed = random_graph(rng)
    d, lex = to_library(edges, seed)
    sign_of = {(u, v): s for u, es in edges.items() for v, s in es}
    for w in words:
        out = resolve(w, lex, d, 4)
        if isinstance(out, Resolved):
            p = out.path
            assert p[0] == w and p[-1] in seed and len(p) - 1 == out.depth
            sign = 1
            for a, b in zip(p, p[1:]):
                sign *= sign_of[(a, b)]
            assert int(out.polarity) == seed[p[-1]] * sign


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_polarity_swap_symmetry(rng):
    words, edges, seed = random_graph(rng)
    d, lex = to_library(edges, seed)
    neg = lex.negated()
    for w in words:
        a, b = resolve(w, lex, d), resolve(w, neg, d)
        assert type(a) is type(b)
        if isinstance(a, Resolved):
            assert b.polarity == -a.polarity and b.path == a.path
        if isinstance(a, Conflict):
            assert (b.positive_path, b.negative_path) == (a.negative_path, a.positive_path)


@settings(max_examples=40, deadline=None)
@given(rng=st.randoms(use_true_random=False))
def test_order_independence_and_monotonicity(rng, tmp_path_factory):
    words, edges, seed = random_graph(rng)
    lines = []
    for u, es in edges.items():
        for v, s in es:
            lines.append(f"{u}\t{v if s > 0 else ''}\t{v if s < 0 else ''}")
    tmp = tmp_path_factory.mktemp("g")
    (tmp / "a.tsv").write_text("\n".join(lines) + "\n")
    rng.shuffle(lines)
    (tmp / "b.tsv").write_text("\n".join(reversed(lines)) + "\n")
    d1, d2 = load_dictionary(tmp / "a.tsv"), load_dictionary(tmp / "b.tsv")
    lex = Lexicon.from_polarities(seed)
    e1, e2 = expand_lexicon(lex, d1), expand_lexicon(lex, d2)
    assert format_lexicon_tsv(e1.lexicon) == format_lexicon_tsv(e2.lexicon)
    assert e1.conflicts == e2.conflicts
    for w, entry in lex.items():
        assert e1.lexicon[w] == entry
    for entry in e1.lexicon.values():
        if entry.provenance is Provenance.EXPANDED:
            assert 1 <= entry.depth <= 3
