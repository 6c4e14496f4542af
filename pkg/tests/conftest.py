import random

import pytest
from hypothesis import strategies as st

from omegaincl import Automaton, UPWord, zoo


@st.composite
def automata(draw, max_states=5, alphabet="ab"):
    n = draw(st.integers(1, max_states))
    delta = [[draw(st.integers(0, n - 1)) for _ in alphabet] for _ in range(n)]
    return Automaton(tuple(alphabet), n, 0, delta)


def upwords(alphabet="ab", max_u=4, max_v=4):
    sym = st.sampled_from(list(alphabet))
    return st.builds(
        UPWord,
        st.lists(sym, max_size=max_u).map("".join),
        st.lists(sym, min_size=1, max_size=max_v).map("".join),
    )


@pytest.fixture
def fig1():
    return zoo.fig1()


@pytest.fixture
def rng(request):
    seed = 20261016
    print(f"seed={seed}")
    return random.Random(seed)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
