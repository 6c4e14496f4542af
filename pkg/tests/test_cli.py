from pathlib import Path

import pytest

from omegaincl import accepts, parse_acceptor, parse_word
from omegaincl.cli import main
from omegaincl.textio import parse_automaton

DATA = str(Path(__file__).resolve().parent.parent / "data") + "/"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def load(name):
    with open(DATA + name) as f:
        return parse_acceptor(f.read())


def test_include_self(capsys):
    assert run(capsys, "include", DATA + "fig1-muller.aut", DATA + "fig1-muller.aut") == (0, "YES", "")


def test_include_negative_witness_revalidates(capsys):
    code, out, _ = run(capsys, "include", DATA + "universal.aut", DATA + "inf-a.aut")
    assert code == 1
    verdict, word = out.split()
    assert verdict == "NO"
    assert run(capsys, "member", DATA + "universal.aut", word)[:2] == (0, "ACCEPT")
    assert run(capsys, "member", DATA + "inf-a.aut", word)[:2] == (1, "REJECT")


def test_equiv(capsys):
    assert run(capsys, "equiv", DATA + "inf-a.aut", DATA + "inf-a-parity.aut")[:2] == (0, "YES")
    code, out, _ = run(capsys, "equiv", DATA + "inf-a.aut", DATA + "universal.aut")
    assert code == 1
    no, direction, word = out.split()
    assert (no, direction) == ("NO", "right-only")
    w = parse_word(word)
    assert accepts(load("universal.aut"), w) and not accepts(load("inf-a.aut"), w)


def test_member(capsys):
    assert run(capsys, "member", DATA + "fig1-muller.aut", "(a)")[:2] == (0, "ACCEPT")
    assert run(capsys, "member", DATA + "fig1-muller.aut", "(b)")[:2] == (1, "REJECT")


def test_rightcon(capsys, tmp_path):
    assert run(capsys, "rightcon", DATA + "bba-window.aut")[:2] == (0, "1")
    out, wit = tmp_path / "rc.aut", tmp_path / "d.txt"
    code, text, _ = run(capsys, "rightcon", DATA + "a-then-anything.aut", "--out", str(out),
                        "--witnesses", str(wit))
    assert (code, text) == (0, "3")
    m = parse_automaton(out.read_text())
    assert m.state_count == 3
    words = [parse_word(line) for line in wit.read_text().splitlines()]
    assert len(words) >= 2


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["include", DATA + "universal.aut"],
    ["include", DATA + "missing.aut", DATA + "universal.aut"],
    ["include", DATA + "fig1-muller.aut", DATA + "inf-a.aut"],
    ["member", DATA + "universal.aut", "ab"],
    ["member", DATA + "universal.aut", "(c)"],
    ["member", DATA + "universal.aut", "()"],
])
def test_error_exit_code(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as e:  # argparse usage errors
        code = e.code
    assert code == 2
    assert capsys.readouterr().err


def test_bad_file_reports_path(capsys, tmp_path):
    bad = tmp_path / "bad.aut"
    bad.write_text("acceptor dba\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 0\nbuchi 0\n")
    code, _, err = run(capsys, "member", str(bad), "(a)")
    assert code == 2
    assert "incomplete transition function: state 0 symbol b" in err
