import random

import pytest
from hypothesis import given

from omegaincl import (Acceptor, Automaton, Buchi, CoBuchi, InputError, Muller, Parity, UPWord,
                       accepts, complement_ba_ca, min_color_inf, prune_muller, rebase, split_muller,
                       to_dpa)
from omegaincl import zoo
from omegaincl.oracle import enum_upwords, random_automaton, random_dba, random_dca, random_dma

from conftest import automata, upwords

WORDS = list(enum_upwords("ab", 2, 4))


def test_buchi_all_final_accepts_everything(fig1):
    a = Acceptor(fig1, Buchi(range(4)))
    assert all(accepts(a, w) for w in WORDS)


def test_parity_single_even_color_rejects():
    a = Acceptor(Automaton(("a", "b"), 1, 0, [[0, 0]]), Parity([2]))
    assert not any(accepts(a, w) for w in WORDS[:50])


def test_min_color_examples(fig1):
    single = Acceptor(Automaton(("a", "b"), 1, 0, [[0, 0]]), Parity([5]))
    assert min_color_inf(single, UPWord("b", "ab")) == 5
    p = Acceptor(fig1, Parity([1, 2, 3, 0]))
    assert min_color_inf(p, UPWord("", "a")) == 1
    assert min_color_inf(p, UPWord("ab", "b")) == 1


@given(automata(), upwords())
def test_parity_acceptance_is_odd_min_color(m, w):
    p = Acceptor(m, Parity([(7 * q + 3) % 5 for q in m.states]))
    assert accepts(p, w) == (min_color_inf(p, w) % 2 == 1)


def test_min_color_needs_parity(fig1):
    with pytest.raises(InputError):
        min_color_inf(Acceptor(fig1, Buchi({0})), UPWord("", "a"))


def test_accepts_unknown_symbol(fig1):
    with pytest.raises(InputError):
        accepts(Acceptor(fig1, Buchi({0})), UPWord("c", "a"))


def test_condition_validation(fig1):
    with pytest.raises(InputError):
        Acceptor(fig1, Buchi({4}))
    with pytest.raises(InputError):
        Acceptor(fig1, Parity([1, 2, 3]))
    with pytest.raises(InputError):
        Acceptor(fig1, Muller([{0, 9}]))
    with pytest.raises(InputError):
        Parity([1, -1])


def test_muller_family_normalized():
    assert Muller([{2, 1}, {0}, {1, 2}, {0, 3}]).family == (
        frozenset({0}), frozenset({0, 3}), frozenset({1, 2}))


def test_complement_structure(fig1):
    b = Acceptor(fig1, Buchi({1, 3}))
    c = complement_ba_ca(b)
    assert c == Acceptor(fig1, CoBuchi({1, 3}))
    assert complement_ba_ca(c) == b
    with pytest.raises(InputError):
        complement_ba_ca(Acceptor(fig1, Parity([0, 0, 0, 0])))


def test_complement_membership():
    rng = random.Random(5)
    words = list(enum_upwords("ab", 2, 3))
    for _ in range(20):
        b = random_dba(rng, rng.randint(1, 4))
        c = complement_ba_ca(b)
        sample = rng.sample(words, 25)
        assert all(accepts(b, w) != accepts(c, w) for w in sample)


def test_to_dpa_colorings():
    m = Automaton(("a", "b"), 2, 0, [[1, 0], [1, 0]])
    assert to_dpa(Acceptor(m, Buchi({0}))).condition == Parity([1, 2])
    assert to_dpa(Acceptor(m, CoBuchi({0}))).condition == Parity([0, 1])
    p = Acceptor(m, Parity([3, 3]))
    assert to_dpa(p) is p
    with pytest.raises(InputError):
        to_dpa(Acceptor(m, Muller([])))


def test_to_dpa_preserves_membership():
    rng = random.Random(6)
    for _ in range(30):
        for a in (random_dba(rng, rng.randint(1, 4)), random_dca(rng, rng.randint(1, 4))):
            d = to_dpa(a)
            assert all(accepts(a, w) == accepts(d, w) for w in WORDS[::7])


def test_rebase(fig1):
    a = Acceptor(fig1, Buchi({3}))
    assert rebase(a, 0) == a
    assert rebase(rebase(a, 1), 2) == rebase(a, 2)
    with pytest.raises(InputError):
        rebase(a, 4)
    start = zoo.a_then_anything()
    w = UPWord("", "b")
    assert not accepts(start, w)
    assert accepts(rebase(start, 1), w)


def test_prune_muller(fig1):
    # {3} has no self-loop; {0} does; {0,1,2} is the 'a' cycle.
    u = Acceptor(fig1, Muller([{3}, {0}, {0, 1, 2}]))
    pruned = prune_muller(u)
    assert pruned.condition.family == (frozenset({0}), frozenset({0, 1, 2}))
    assert prune_muller(pruned) is pruned
    assert all(accepts(u, w) == accepts(pruned, w) for w in WORDS)


def test_prune_random_membership():
    rng = random.Random(8)
    for _ in range(20):
        u = random_dma(rng, rng.randint(1, 4), scc_bias=0.3)
        pruned = prune_muller(u)
        assert all(accepts(u, w) == accepts(pruned, w) for w in WORDS[::3])


def test_split_muller():
    rng = random.Random(9)
    for _ in range(30):
        u = random_dma(rng, rng.randint(1, 4))
        parts = split_muller(u)
        k = len(u.condition.family)
        assert len(parts) == k
        if k == 1:
            assert parts == [u]
        for w in WORDS[::5]:
            assert accepts(u, w) == any(accepts(p, w) for p in parts)
    empty = Acceptor(random_automaton(rng, 2), Muller([]))
    assert split_muller(empty) == []
    assert not any(accepts(empty, w) for w in WORDS)
