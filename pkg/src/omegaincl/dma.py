"""Inclusion and equivalence for deterministic Muller acceptors.

The general case reduces to single-final-set left operands, each of which is
checked through Büchi acceptors that recognize "stay inside F and visit all
of F infinitely often" from a given starting state.
"""
from __future__ import annotations

from dataclasses import dataclass

from .acceptors import (Acceptor, Buchi, EquivVerdict, Muller, Verdict, prune_muller, rebase,
                        split_muller, two_way)
from .automata import Automaton, graph_sccs, is_scc, product, shortest_word_to, witness
from .errors import InputError


@dataclass(frozen=True)
class Anchor:
    i: int


@dataclass(frozen=True)
class Waiting:
    """The original run is at the ``i``-th member of F; the next anchor due is ``j``."""

    i: int
    j: int


@dataclass(frozen=True)
class Dead:
    pass


@dataclass(frozen=True)
class CycleDba:
    acceptor: Acceptor
    tags: tuple  # tags[s] is the Anchor/Waiting/Dead role of state s
    order: tuple  # order[i] is the original state behind Anchor(i)

    def name(self, s: int) -> str:
        tag = self.tags[s]
        if isinstance(tag, Anchor):
            return f"q{self.order[tag.i]}"
        if isinstance(tag, Waiting):
            return f"r{tag.i},{tag.j}"
        return "d0"


def scc_to_dba(m: Automaton, final: frozenset, q: int) -> CycleDba:
    """Büchi acceptor for the words whose run from ``q`` stays in ``final`` and
    visits each of its states infinitely often.

    State layout: anchors ``0..k-1`` (``q`` first, then the rest ascending),
    then ``Waiting(i, j)`` row-major over ``i`` with ``j != i``, then the dead
    state last; ``k*k + 1`` states in total.
    """
    final = frozenset(final)
    if q not in final:
        raise InputError(f"state {q} is not in the final set {sorted(final)}")
    if not is_scc(m, final):
        raise InputError(f"{sorted(final)} is not a strongly connected set of the automaton")
    order = (q,) + tuple(sorted(final - {q}))
    k = len(order)
    pos = {s: i for i, s in enumerate(order)}
    dead = k * k

    def waiting(i, j):
        return k + i * (k - 1) + (j if j < i else j - 1)

    tags = [Anchor(i) for i in range(k)]
    for i in range(k):
        tags.extend(Waiting(i, j) for j in range(k) if j != i)
    tags.append(Dead())

    delta = [None] * (k * k + 1)
    for i, s in enumerate(order):
        nxt = (i + 1) % k
        anchor_row = []
        for t in m.delta[s]:
            kk = pos.get(t)
            if kk is None:
                anchor_row.append(dead)
            elif kk == nxt:
                anchor_row.append(kk)
            else:
                anchor_row.append(waiting(kk, nxt))
        delta[i] = anchor_row
        for j in range(k):
            if j == i:
                continue
            row = []
            for t in m.delta[s]:
                kk = pos.get(t)
                if kk is None:
                    row.append(dead)
                elif kk == j:
                    row.append(kk)
                else:
                    row.append(waiting(kk, j))
            delta[waiting(i, j)] = row
    delta[dead] = [dead] * len(m.alphabet)
    b = Automaton(m.alphabet, k * k + 1, 0, delta)
    return CycleDba(Acceptor(b, Buchi({0})), tuple(tags), order)


def include_dba_dma(b: Acceptor, u: Acceptor) -> Verdict:
    """Decide whether the Büchi acceptor ``b`` is included in the Muller acceptor ``u``."""
    if not isinstance(b.condition, Buchi):
        raise InputError(f"left operand must be a Büchi acceptor, got {b.kind}")
    if not isinstance(u.condition, Muller):
        raise InputError(f"right operand must be a Muller acceptor, got {u.kind}")
    u = prune_muller(u)
    final = b.condition.final
    family = u.condition.family
    members = set(family)
    prod = product(b.automaton, u.automaton)
    pm = prod.automaton
    pairs = prod.pair_of

    def bad(comp) -> bool:
        left = {pairs[s][0] for s in comp}
        return not final.isdisjoint(left) and frozenset(pairs[s][1] for s in comp) not in members

    comps = [c.members for c in graph_sccs(pm) if c.nontrivial]
    for comp in comps:
        if bad(comp):
            return Verdict(False, witness(pm, comp))

    for comp in comps:
        left = {pairs[s][0] for s in comp}
        if final.isdisjoint(left):
            continue
        right = {pairs[s][1] for s in comp}
        candidates = [s for s, (q1, _) in enumerate(pairs) if q1 in left]
        for fj in family:
            if not fj <= right:
                continue
            for q in sorted(fj):
                allowed = [s for s in candidates if pairs[s][1] in fj and pairs[s][1] != q]
                for sub in graph_sccs(pm, allowed):
                    if sub.nontrivial and bad(sub.members):
                        return Verdict(False, witness(pm, sub.members))
    return Verdict(True)


def include_single_dma(u1: Acceptor, u2: Acceptor) -> Verdict:
    """Inclusion when ``u1`` has exactly one final set."""
    if not isinstance(u1.condition, Muller) or len(u1.condition.family) != 1:
        raise InputError("left operand must be a Muller acceptor with exactly one final set")
    if not isinstance(u2.condition, Muller):
        raise InputError(f"right operand must be a Muller acceptor, got {u2.kind}")
    (final,) = u1.condition.family
    m1 = u1.automaton
    if not is_scc(m1, final):
        return Verdict(True)
    u2 = prune_muller(u2)
    prod = product(m1, u2.automaton)
    cycle_dbas = {}
    for s, (q1, q2) in enumerate(prod.pair_of):
        if q1 not in final:
            continue
        if q1 not in cycle_dbas:
            cycle_dbas[q1] = scc_to_dba(m1, final, q1).acceptor
        verdict = include_dba_dma(cycle_dbas[q1], rebase(u2, q2))
        if not verdict.included:
            return Verdict(False, verdict.witness.after(shortest_word_to(prod.automaton, s)))
    return Verdict(True)


def include_dma(u1: Acceptor, u2: Acceptor) -> Verdict:
    for u in (u1, u2):
        if not isinstance(u.condition, Muller):
            raise InputError(f"include_dma needs Muller acceptors, got {u.kind}")
    if u1.alphabet != u2.alphabet:
        raise InputError(f"alphabet mismatch: {''.join(u1.alphabet)!r} vs {''.join(u2.alphabet)!r}")
    u1, u2 = prune_muller(u1), prune_muller(u2)
    for single in split_muller(u1):
        verdict = include_single_dma(single, u2)
        if not verdict.included:
            return verdict
    return Verdict(True)


def equiv_dma(u1: Acceptor, u2: Acceptor) -> EquivVerdict:
    return two_way(include_dma, u1, u2)
