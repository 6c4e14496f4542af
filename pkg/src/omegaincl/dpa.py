"""Inclusion and equivalence for deterministic parity acceptors.

DBA and DCA operands are handled by recoloring them with two colors first.
"""
from __future__ import annotations

from typing import Optional

from .acceptors import Acceptor, EquivVerdict, Parity, Verdict, to_dpa, two_way
from .automata import UPWord, graph_sccs, product, witness
from .errors import InputError


def _colors_of(p: Acceptor) -> tuple:
    if not isinstance(p.condition, Parity):
        raise InputError(f"expected a parity acceptor, got {p.kind}")
    return p.condition.colors


def _colors_in_product(prod, c1, c2, k1, k2) -> Optional[UPWord]:
    pairs = prod.pair_of
    survivors = [s for s, (q1, q2) in enumerate(pairs) if c1[q1] >= k1 and c2[q2] >= k2]
    if not survivors:
        return None
    for comp in graph_sccs(prod.automaton, survivors):
        if not comp.nontrivial:
            continue
        if (min(c1[pairs[s][0]] for s in comp.members) == k1
                and min(c2[pairs[s][1]] for s in comp.members) == k2):
            return witness(prod.automaton, comp.members)
    return None


def colors(p1: Acceptor, p2: Acceptor, k1: int, k2: int) -> Optional[UPWord]:
    """A word whose least infinitely-visited color is ``k1`` in ``p1`` and ``k2`` in ``p2``.

    Returns ``None`` if no such word exists.
    """
    c1, c2 = _colors_of(p1), _colors_of(p2)
    prod = product(p1.automaton, p2.automaton)
    return _colors_in_product(prod, c1, c2, k1, k2)


def include_dpa(p1: Acceptor, p2: Acceptor) -> Verdict:
    c1, c2 = _colors_of(p1), _colors_of(p2)
    prod = product(p1.automaton, p2.automaton)
    odd = sorted({c for c in c1 if c % 2 == 1})
    even = sorted({c for c in c2 if c % 2 == 0})
    for k1 in odd:
        for k2 in even:
            w = _colors_in_product(prod, c1, c2, k1, k2)
            if w is not None:
                return Verdict(False, w)
    return Verdict(True)


def equiv_dpa(p1: Acceptor, p2: Acceptor) -> EquivVerdict:
    return two_way(include_dpa, p1, p2)


def include_ba_ca(a1: Acceptor, a2: Acceptor) -> Verdict:
    """Inclusion between Büchi/coBüchi acceptors, either kind on either side."""
    for a in (a1, a2):
        if a.kind not in ("dba", "dca"):
            raise InputError(f"include_ba_ca needs Büchi or coBüchi acceptors, got {a.kind}")
    return include_dpa(to_dpa(a1), to_dpa(a2))


def equiv_ba_ca(a1: Acceptor, a2: Acceptor) -> EquivVerdict:
    return two_way(include_ba_ca, a1, a2)
