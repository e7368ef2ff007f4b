import itertools

from hypothesis import given, strategies as st
import pytest

from qtg.notation import (ACCIDENTAL_TOKENS, MalformedSpelling, NATURAL_VALUES, Spelling,
                          canonical_name, clock_label, format_spelling, names_of, parse_spelling)


@pytest.mark.parametrize("text, letter, acc, pc", [
    ("C", "C", 0, 0),
    ("Dtb", "D", -3, 1),
    ("B#", "B", 2, 0),
    ("Fqb", "F", -1, 9),
    ("gq#", "G", 1, 15),
    ("An", "A", 0, 18),
])
def test_parse_spelling(text, letter, acc, pc):
    s = parse_spelling(text)
    assert (s.letter, s.accidental) == (letter, acc)
    assert s.pc == pc


@pytest.mark.parametrize("bad", ["H", "", "C##", "Cx", "q#", "C t#", "Cbb"])
def test_malformed(bad):
    with pytest.raises(MalformedSpelling):
        parse_spelling(bad)


def test_spelling_rejects_out_of_range_accidental():
    with pytest.raises(MalformedSpelling):
        Spelling("C", 4)


@pytest.mark.parametrize("s, text", [(Spelling("G", 1), "Gq#"), (Spelling("E", -2), "Eb"),
                                     (Spelling("F", 3), "Ft#"), (Spelling("C", 0), "C")])
def test_format_spelling(s, text):
    assert format_spelling(s) == text
    assert str(s) == text


def test_names_of_examples():
    assert names_of(7) == [Spelling("D", 3), Spelling("E", -1)]
    assert names_of(0) == [Spelling("C", 0)]
    assert names_of(23) == [Spelling("B", 1), Spelling("C", -1)]


@pytest.mark.parametrize("pc, name", [(2, "C#"), (10, "F"), (16, "G#"), (13, "Ft#"), (1, "Cq#")])
def test_canonical_name(pc, name):
    assert format_spelling(canonical_name(pc)) == name


def test_clock_label_counts():
    lengths = [len(names_of(pc)) for pc in range(24)]
    assert lengths.count(1) == 7 and lengths.count(2) == 17
    assert [pc for pc in range(24) if lengths[pc] == 1] == sorted(NATURAL_VALUES.values())


def test_clock_labels_evaluate_and_round_trip():
    for pc in range(24):
        for s in names_of(pc):
            assert s.pc == pc
            assert parse_spelling(format_spelling(s)) == s
        assert canonical_name(pc) == names_of(pc)[0]


def test_sharp_family_first():
    for pc in range(24):
        names = names_of(pc)
        if len(names) == 2:
            assert names[0].accidental > 0 > names[1].accidental


def test_all_56_combinations_parse():
    combos = list(itertools.product("ABCDEFG", ACCIDENTAL_TOKENS))
    assert len(combos) == 56
    for letter, token in combos:
        s = parse_spelling(letter + token)
        assert 0 <= s.pc < 24
        assert s.pc == (NATURAL_VALUES[letter] + ACCIDENTAL_TOKENS[token]) % 24


@given(st.sampled_from("ABCDEFG"), st.integers(-3, 3))
def test_round_trip_any_spelling(letter, acc):
    s = Spelling(letter, acc)
    assert parse_spelling(format_spelling(s)) == s


def test_clock_label_text():
    assert clock_label(0) == "C"
    assert clock_label(9) == "Eq#/Fqb"
