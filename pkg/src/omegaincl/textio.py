"""Line-oriented text format for acceptors and the ``u(v)`` word syntax.

::

    acceptor dpa          # dba | dca | dpa | dma  (or "automaton": no condition)
    alphabet a b
    states 2
    initial 0
    trans 0 a 1           # exactly states * |alphabet| lines
    ...
    colors 0:1 1:2        # or: buchi 0 1 / cobuchi 0 / muller { 0 1 } { 1 }

``#`` starts a comment; blank lines are ignored.
"""
from __future__ import annotations

import re

from .acceptors import Acceptor, Buchi, CoBuchi, Muller, Parity
from .automata import Automaton, UPWord
from .errors import InputError

KINDS = ("dba", "dca", "dpa", "dma")
_CONDITION_KEYWORD = {"dba": "buchi", "dca": "cobuchi", "dpa": "colors", "dma": "muller"}


class FormatError(InputError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(token, lineno, what):
    if not re.fullmatch(r"\d+", token):
        raise FormatError(lineno, f"expected a nonnegative integer for {what}, got {token!r}")
    return int(token)


def _state(token, lineno, n):
    q = _int(token, lineno, "a state")
    if q >= n:
        raise FormatError(lineno, f"state index {q} out of range 0..{n - 1}")
    return q


def _expect(it, keyword, last_lineno):
    try:
        lineno, tokens = next(it)
    except StopIteration:
        raise FormatError(last_lineno, f"missing '{keyword}' line") from None
    if tokens[0] != keyword:
        raise FormatError(lineno, f"expected '{keyword}', got {tokens[0]!r}")
    return lineno, tokens[1:]


def _parse(text):
    it = iter(list(_lines(text)))
    try:
        lineno, tokens = next(it)
    except StopIteration:
        raise FormatError(0, "empty input") from None
    if tokens[0] == "automaton":
        if len(tokens) != 1:
            raise FormatError(lineno, "'automaton' takes no arguments")
        kind = None
    elif tokens[0] == "acceptor":
        if len(tokens) != 2 or tokens[1] not in KINDS:
            raise FormatError(lineno, f"acceptor kind must be one of {', '.join(KINDS)}")
        kind = tokens[1]
    else:
        raise FormatError(lineno, f"expected 'acceptor <kind>', got {tokens[0]!r}")

    lineno, symbols = _expect(it, "alphabet", lineno)
    if not symbols:
        raise FormatError(lineno, "alphabet must be nonempty")
    for s in symbols:
        if len(s) != 1 or s in "(){}:#":
            raise FormatError(lineno, f"invalid symbol {s!r}: symbols are single characters")
    if len(set(symbols)) != len(symbols):
        raise FormatError(lineno, "duplicate symbol in alphabet")

    lineno, args = _expect(it, "states", lineno)
    if len(args) != 1:
        raise FormatError(lineno, "'states' takes one integer")
    n = _int(args[0], lineno, "the state count")
    if n < 1:
        raise FormatError(lineno, "an automaton needs at least one state")

    lineno, args = _expect(it, "initial", lineno)
    if len(args) != 1:
        raise FormatError(lineno, "'initial' takes one state")
    initial = _state(args[0], lineno, n)

    transitions = {}
    rest = list(it)
    k = 0
    while k < len(rest) and rest[k][1][0] == "trans":
        lineno, tokens = rest[k]
        if len(tokens) != 4:
            raise FormatError(lineno, "expected 'trans <from> <symbol> <to>'")
        src = _state(tokens[1], lineno, n)
        sym = tokens[2]
        if sym not in symbols:
            raise FormatError(lineno, f"unknown symbol {sym!r}")
        dst = _state(tokens[3], lineno, n)
        if (src, sym) in transitions:
            raise FormatError(lineno, f"duplicate transition: state {src} symbol {sym}")
        transitions[(src, sym)] = dst
        k += 1
    for q in range(n):
        for s in symbols:
            if (q, s) not in transitions:
                raise FormatError(lineno, f"incomplete transition function: state {q} symbol {s}")
    m = Automaton.from_transitions(symbols, n, initial, transitions)
    rest = rest[k:]

    if kind is None:
        if rest:
            raise FormatError(rest[0][0], "unexpected content after the transitions")
        return m
    if not rest:
        raise FormatError(lineno, f"missing '{_CONDITION_KEYWORD[kind]}' condition line")
    lineno, tokens = rest[0]
    if len(rest) > 1:
        raise FormatError(rest[1][0], "unexpected content after the condition")
    keyword = _CONDITION_KEYWORD[kind]
    if tokens[0] != keyword:
        raise FormatError(lineno, f"a {kind} file needs a '{keyword}' condition, got {tokens[0]!r}")
    return Acceptor(m, _condition(kind, tokens[1:], lineno, n))


def _condition(kind, args, lineno, n):
    if kind in ("dba", "dca"):
        states = [_state(t, lineno, n) for t in args]
        if len(set(states)) != len(states):
            raise FormatError(lineno, "duplicate state in final set")
        return Buchi(states) if kind == "dba" else CoBuchi(states)
    if kind == "dpa":
        colors = {}
        for t in args:
            if t.count(":") != 1:
                raise FormatError(lineno, f"expected '<state>:<color>', got {t!r}")
            q, c = t.split(":")
            q = _state(q, lineno, n)
            if q in colors:
                raise FormatError(lineno, f"state {q} colored twice")
            colors[q] = _int(c, lineno, "a color")
        missing = [q for q in range(n) if q not in colors]
        if missing:
            raise FormatError(lineno, f"partial color map: no color for states {missing}")
        return Parity([colors[q] for q in range(n)])
    family = []
    current = None
    for t in args:
        if t == "{":
            if current is not None:
                raise FormatError(lineno, "nested '{' in muller family")
            current = []
        elif t == "}":
            if current is None:
                raise FormatError(lineno, "unmatched '}' in muller family")
            if not current:
                raise FormatError(lineno, "empty final set in muller family")
            family.append(frozenset(current))
            current = None
        else:
            if current is None:
                raise FormatError(lineno, f"state {t!r} outside braces in muller family")
            current.append(_state(t, lineno, n))
    if current is not None:
        raise FormatError(lineno, "unterminated '{' in muller family")
    return Muller(family)


def parse_acceptor(text: str) -> Acceptor:
    result = _parse(text)
    if isinstance(result, Automaton):
        raise FormatError(1, "expected an acceptor, found a bare automaton")
    return result


def parse_automaton(text: str) -> Automaton:
    """Read an ``automaton`` file, or the structure of an acceptor file."""
    result = _parse(text)
    return result if isinstance(result, Automaton) else result.automaton


def _structure_lines(m: Automaton) -> list:
    lines = [
        f"alphabet {' '.join(m.alphabet)}",
        f"states {m.state_count}",
        f"initial {m.initial}",
    ]
    for q in range(m.state_count):
        for a, t in zip(m.alphabet, m.delta[q]):
            lines.append(f"trans {q} {a} {t}")
    return lines


def serialize_automaton(m: Automaton) -> str:
    return "\n".join(["automaton"] + _structure_lines(m)) + "\n"


def serialize_acceptor(a: Acceptor) -> str:
    cond = a.condition
    if isinstance(cond, (Buchi, CoBuchi)):
        body = " ".join(str(q) for q in sorted(cond.final))
    elif isinstance(cond, Parity):
        body = " ".join(f"{q}:{c}" for q, c in enumerate(cond.colors))
    else:
        body = " ".join("{ " + " ".join(str(q) for q in sorted(s)) + " }" for s in cond.family)
    keyword = _CONDITION_KEYWORD[a.kind]
    cond_line = f"{keyword} {body}" if body else keyword
    return "\n".join([f"acceptor {a.kind}"] + _structure_lines(a.automaton) + [cond_line]) + "\n"


_WORD = re.compile(r"([^()\s]*)\(([^()\s]+)\)")


def parse_word(text: str) -> UPWord:
    match = _WORD.fullmatch(text.strip())
    if match is None:
        raise InputError(f"malformed word {text!r}: expected u(v) with v nonempty")
    return UPWord(match.group(1), match.group(2))


def format_word(w: UPWord) -> str:
    return f"{w.prefix}({w.period})"
