"""Exponential reference procedures for testing on small instances.

Nothing here is used by the polynomial algorithms.  The SCC family is found by
checking every subset of states directly against the definition, and
inclusion is decided by looking at every possible infinity set of the product.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .acceptors import (Acceptor, Buchi, CoBuchi, Muller, Parity, Verdict, is_accepting_set)
from .automata import Automaton, UPWord, product, witness
from .errors import InputError

DEFAULT_BOUND = 12


class OracleBoundError(InputError):
    """The instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class OmegaSccFamily:
    all_sccs: tuple  # frozensets, ordered by bitmask value

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.all_sccs

    def __len__(self) -> int:
        return len(self.all_sccs)

    def maximal(self) -> list:
        return [s for s in self.all_sccs if not any(s < t for t in self.all_sccs)]


def _closure(masks, start, edges, n):
    """Per-subset closure of ``start`` under ``edges`` without leaving the subset."""
    reach = start
    while True:
        grown = reach.copy()
        for s in range(n):
            hit = ((reach >> s) & 1).astype(bool)
            grown[hit] |= edges[s]
        grown &= masks
        if np.array_equal(grown, reach):
            return reach
        reach = grown


def enum_sccs_brute(m: Automaton, bound: int = DEFAULT_BOUND) -> OmegaSccFamily:
    """Every nonempty state set that is strongly connected using only internal
    transitions and has an internal edge, found by scanning all subsets."""
    n = m.state_count
    if n > bound:
        raise OracleBoundError(f"{n} states exceeds the oracle bound {bound}")
    succ = [0] * n
    pred = [0] * n
    for q in range(n):
        for t in m.delta[q]:
            succ[q] |= 1 << t
            pred[t] |= 1 << q
    masks = np.arange(1, 1 << n, dtype=np.int64)
    low = masks & -masks
    fwd = _closure(masks, low, succ, n)
    bwd = _closure(masks, low, pred, n)
    connected = (fwd == masks) & (bwd == masks)
    # A singleton qualifies only with a self-loop.
    single = (masks & (masks - 1)) == 0
    loops = np.zeros_like(masks, dtype=bool)
    for q in range(n):
        if succ[q] >> q & 1:
            loops |= masks == (1 << q)
    ok = connected & (~single | loops)
    sets = tuple(frozenset(q for q in range(n) if mask >> q & 1) for mask in masks[ok].tolist())
    return OmegaSccFamily(sets)


def include_brute(a1: Acceptor, a2: Acceptor, bound: int = DEFAULT_BOUND) -> Verdict:
    """Inclusion by checking every infinity set the product can realize."""
    prod = product(a1.automaton, a2.automaton)
    for comp in enum_sccs_brute(prod.automaton, bound).all_sccs:
        if (is_accepting_set(a1.condition, prod.project(comp, 0))
                and not is_accepting_set(a2.condition, prod.project(comp, 1))):
            return Verdict(False, witness(prod.automaton, comp))
    return Verdict(True)


def enum_upwords(alphabet, max_u: int, max_v: int):
    """All words ``u(v)`` with ``|u| <= max_u`` and ``1 <= |v| <= max_v``.

    Prefixes vary slowest; both parts run in length-lexicographic order.
    """
    if max_u < 0 or max_v < 1:
        raise InputError("need max_u >= 0 and max_v >= 1")
    alphabet = tuple(alphabet)

    def words(lo, hi):
        for k in range(lo, hi + 1):
            for t in itertools.product(alphabet, repeat=k):
                yield "".join(t)

    for u in words(0, max_u):
        for v in words(1, max_v):
            yield UPWord(u, v)


# Random instances.

def random_automaton(rng: random.Random, n: int, alphabet="ab") -> Automaton:
    delta = [[rng.randrange(n) for _ in alphabet] for _ in range(n)]
    return Automaton(tuple(alphabet), n, 0, delta)


def random_subset(rng: random.Random, n: int) -> frozenset:
    return frozenset(q for q in range(n) if rng.random() < 0.5)


def random_dpa(rng, n, alphabet="ab", max_color=3) -> Acceptor:
    m = random_automaton(rng, n, alphabet)
    return Acceptor(m, Parity([rng.randint(0, max_color) for _ in range(n)]))


def random_dba(rng, n, alphabet="ab") -> Acceptor:
    return Acceptor(random_automaton(rng, n, alphabet), Buchi(random_subset(rng, n)))


def random_dca(rng, n, alphabet="ab") -> Acceptor:
    return Acceptor(random_automaton(rng, n, alphabet), CoBuchi(random_subset(rng, n)))


def random_dma(rng, n, alphabet="ab", max_sets=3, scc_bias=0.7) -> Acceptor:
    """Random Muller acceptor; with probability ``scc_bias`` each final set is an
    actual SCC of the automaton (otherwise an arbitrary nonempty subset)."""
    m = random_automaton(rng, n, alphabet)
    sccs = list(enum_sccs_brute(m, bound=max(n, DEFAULT_BOUND)).all_sccs) if n <= 16 else []
    family = []
    for _ in range(rng.randint(0, max_sets)):
        if sccs and rng.random() < scc_bias:
            family.append(rng.choice(sccs))
        else:
            s = random_subset(rng, n) or frozenset({rng.randrange(n)})
            family.append(s)
    return Acceptor(m, Muller(family))
