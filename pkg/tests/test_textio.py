import random
from pathlib import Path

import pytest
from hypothesis import given

from omegaincl import UPWord, accepts, format_word, parse_acceptor, parse_word, zoo
from omegaincl.textio import FormatError, parse_automaton, serialize_acceptor, serialize_automaton
from omegaincl.oracle import random_dba, random_dca, random_dma, random_dpa

from conftest import upwords

UNIVERSAL = """acceptor dba
alphabet a
states 1
initial 0
trans 0 a 0
buchi 0
"""

TWO_STATE = """# comment line
acceptor dba

alphabet a b   # trailing comment
states 2
initial 0
trans 0 a 1
trans 0 b 0
trans 1 a 1
trans 1 b 0
buchi 1
"""


def test_parse_universal():
    a = parse_acceptor(UNIVERSAL)
    assert a.kind == "dba"
    assert accepts(a, UPWord("", "a"))
    assert serialize_acceptor(a) == UNIVERSAL


def test_parse_with_comments_and_blank_lines():
    a = parse_acceptor(TWO_STATE)
    assert a == zoo.infinitely_many_a()


def test_parse_fig1_muller():
    with open(Path(__file__).resolve().parent.parent / "data" / "fig1-muller.aut") as f:
        a = parse_acceptor(f.read())
    assert a == zoo.fig1_muller()


def replace_line(text, old, new):
    assert old in text
    return text.replace(old, new)


@pytest.mark.parametrize("text,message", [
    (replace_line(TWO_STATE, "trans 0 b 0\n", ""), "incomplete transition function: state 0 symbol b"),
    (replace_line(TWO_STATE, "trans 1 b 0\n", "trans 1 b 0\ntrans 1 b 1\n"), "duplicate transition: state 1 symbol b"),
    (replace_line(TWO_STATE, "trans 1 b 0", "trans 1 b 2"), "state index 2 out of range"),
    (replace_line(TWO_STATE, "trans 1 b 0", "trans 1 c 0"), "unknown symbol 'c'"),
    (replace_line(TWO_STATE, "buchi 1", "buchi 5"), "state index 5 out of range"),
    (replace_line(TWO_STATE, "initial 0", "initial 2"), "state index 2 out of range"),
    (replace_line(TWO_STATE, "acceptor dba", "acceptor dxa"), "acceptor kind"),
    (replace_line(TWO_STATE, "buchi 1", "colors 0:1"), "needs a 'buchi' condition"),
    (replace_line(replace_line(TWO_STATE, "acceptor dba", "acceptor dpa"), "buchi 1", "colors 0:1"),
     "partial color map"),
    (replace_line(replace_line(TWO_STATE, "acceptor dba", "acceptor dma"), "buchi 1", "muller { 0 1"),
     "unterminated"),
    (replace_line(TWO_STATE, "buchi 1", ""), "missing 'buchi' condition line"),
    (replace_line(TWO_STATE, "alphabet a b", "alphabet ab"), "invalid symbol"),
    (replace_line(TWO_STATE, "alphabet a b", "alphabet a a"), "duplicate symbol"),
    ("", "empty input"),
])
def test_parse_errors(text, message):
    with pytest.raises(FormatError, match=message) as info:
        parse_acceptor(text)
    if text:
        assert "line " in str(info.value)


def test_error_reports_line_number():
    text = replace_line(TWO_STATE, "trans 1 b 0", "trans 1 b 9")
    with pytest.raises(FormatError) as info:
        parse_acceptor(text)
    assert info.value.lineno == 10


def test_condition_variants_round_trip():
    rng = random.Random(51)
    for make in (random_dba, random_dca, random_dpa, random_dma):
        for _ in range(10):
            a = make(rng, rng.randint(1, 4))
            text = serialize_acceptor(a)
            assert parse_acceptor(text) == a
            assert serialize_acceptor(parse_acceptor(text)) == text


def test_empty_conditions_round_trip():
    for text in ["acceptor dma\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0\nmuller\n",
                 "acceptor dba\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0\nbuchi\n"]:
        assert serialize_acceptor(parse_acceptor(text)) == text


def test_automaton_files():
    m = zoo.fig1()
    text = serialize_automaton(m)
    assert text.startswith("automaton\n")
    assert parse_automaton(text) == m
    with pytest.raises(FormatError):
        parse_acceptor(text)


@pytest.mark.parametrize("text,word", [
    ("(a)", UPWord("", "a")),
    ("ab(ba)", UPWord("ab", "ba")),
])
def test_word_syntax(text, word):
    assert parse_word(text) == word
    assert format_word(word) == text


@pytest.mark.parametrize("bad", ["()", "ab", "a(b", "a(b)c", "(a)(b)", "a b(c)", ""])
def test_word_syntax_errors(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


@given(upwords("abc"))
def test_word_round_trip(w):
    assert parse_word(format_word(w)) == w
