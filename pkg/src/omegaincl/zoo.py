"""Small named automata and acceptors used in tests, notebooks and data files."""
from __future__ import annotations

import itertools

from .acceptors import Acceptor, Buchi, Muller
from .automata import Automaton

FIG1_TRANSITIONS = {
    (0, "b"): 0, (0, "a"): 2,
    (1, "a"): 0, (1, "b"): 2,
    (2, "a"): 1, (2, "b"): 3,
    (3, "a"): 1, (3, "b"): 0,
}


def fig1() -> Automaton:
    """Four states over ``a, b``: ``a`` cycles 0 -> 2 -> 1 -> 0, ``b`` loops at 0."""
    return Automaton.from_transitions("ab", 4, 0, FIG1_TRANSITIONS)


def fig1_muller() -> Acceptor:
    return Acceptor(fig1(), Muller([{0, 1, 2}]))


def window_automaton(k: int = 3, alphabet: str = "ab") -> tuple:
    """States are the last ``k`` symbols read (initially all ``alphabet[0]``).

    Returns the automaton and the window string of each state; windows are
    numbered in lexicographic order of the alphabet.
    """
    windows = ["".join(t) for t in itertools.product(alphabet, repeat=k)]
    index = {w: i for i, w in enumerate(windows)}
    delta = [[index[w[1:] + a] for a in alphabet] for w in windows]
    return Automaton(tuple(alphabet), len(windows), index[alphabet[0] * k], delta), windows


def bba_window() -> Acceptor:
    """Muller acceptor for the words that eventually repeat ``bba`` forever."""
    m, windows = window_automaton(3, "ab")
    final = {windows.index(w) for w in ("abb", "bab", "bba")}
    return Acceptor(m, Muller([final]))


def a_then_anything() -> Acceptor:
    """Büchi acceptor for words starting with ``a``: 0 initial, 1 accepting sink, 2 rejecting sink."""
    m = Automaton(("a", "b"), 3, 0, [[1, 2], [1, 1], [2, 2]])
    return Acceptor(m, Buchi({1}))


def universal_buchi(alphabet: str = "ab") -> Acceptor:
    m = Automaton(tuple(alphabet), 1, 0, [[0] * len(alphabet)])
    return Acceptor(m, Buchi({0}))


def infinitely_many_a() -> Acceptor:
    """Two states tracking the last symbol; accepting after an ``a``."""
    m = Automaton(("a", "b"), 2, 0, [[1, 0], [1, 0]])
    return Acceptor(m, Buchi({1}))
