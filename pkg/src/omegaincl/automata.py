"""Complete deterministic automata over finite alphabets.

States are dense integers ``0 .. state_count - 1``; symbols are single
characters and the order of ``alphabet`` is the tie-breaking order used by
every search in the package.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InputError, PreconditionError


@dataclass(frozen=True)
class UPWord:
    """The ultimately periodic word ``prefix · period^ω``."""

    prefix: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise InputError("the period of an ultimately periodic word must be nonempty")

    def __len__(self) -> int:
        return len(self.prefix) + len(self.period)

    def after(self, x: str) -> "UPWord":
        """Return ``x · self``."""
        return UPWord(x + self.prefix, self.period)

    def __str__(self) -> str:
        return f"{self.prefix}({self.period})"


@dataclass(frozen=True)
class StateSet:
    members: frozenset
    nontrivial: bool = True

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, q) -> bool:
        return q in self.members


@dataclass(frozen=True)
class Automaton:
    alphabet: tuple
    state_count: int
    initial: int
    delta: tuple  # delta[q][i] is the successor of q on alphabet[i]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        if not alphabet:
            raise InputError("alphabet must be nonempty")
        if len(set(alphabet)) != len(alphabet):
            raise InputError(f"duplicate symbols in alphabet {alphabet!r}")
        for a in alphabet:
            if not isinstance(a, str) or len(a) != 1:
                raise InputError(f"symbols must be single characters, got {a!r}")
        if self.state_count < 1:
            raise InputError("an automaton needs at least one state")
        if not 0 <= self.initial < self.state_count:
            raise InputError(f"initial state {self.initial} out of range")
        delta = tuple(tuple(row) for row in self.delta)
        if len(delta) != self.state_count:
            raise InputError("transition table must have one row per state")
        for q, row in enumerate(delta):
            if len(row) != len(alphabet):
                raise InputError(f"state {q} does not have one successor per symbol")
            for t in row:
                if not 0 <= t < self.state_count:
                    raise InputError(f"transition target {t} from state {q} out of range")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(alphabet)})

    @classmethod
    def from_transitions(cls, alphabet, state_count, initial, transitions) -> "Automaton":
        """Build from a mapping ``(state, symbol) -> state``; every pair must be present."""
        alphabet = tuple(alphabet)
        delta = []
        for q in range(state_count):
            row = []
            for a in alphabet:
                if (q, a) not in transitions:
                    raise InputError(f"incomplete transition function: state {q} symbol {a}")
                row.append(transitions[(q, a)])
            delta.append(row)
        return cls(alphabet, state_count, initial, delta)

    @property
    def states(self) -> range:
        return range(self.state_count)

    def symbol_index(self, a: str, position: Optional[int] = None) -> int:
        try:
            return self._index[a]
        except KeyError:
            where = "" if position is None else f" at position {position}"
            raise InputError(f"unknown symbol {a!r}{where}") from None

    def step(self, q: int, a: str) -> int:
        return self.delta[q][self.symbol_index(a)]

    def successors(self, q: int) -> tuple:
        return self.delta[q]

    def with_initial(self, q: int) -> "Automaton":
        if not 0 <= q < self.state_count:
            raise InputError(f"state {q} out of range")
        if q == self.initial:
            return self
        return Automaton(self.alphabet, self.state_count, q, self.delta)


def run_finite(m: Automaton, q: int, u: str) -> int:
    """Return the state reached from ``q`` after reading ``u``."""
    delta, index = m.delta, m._index
    for pos, a in enumerate(u):
        i = index.get(a)
        if i is None:
            m.symbol_index(a, pos)
        q = delta[q][i]
    return q


def reachable_states(m: Automaton, start: Optional[int] = None) -> list:
    start = m.initial if start is None else start
    seen = [False] * m.state_count
    seen[start] = True
    order = [start]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in m.delta[q]:
            if not seen[t]:
                seen[t] = True
                order.append(t)
                queue.append(t)
    return order


def restrict_reachable(m: Automaton):
    """Drop unreachable states, keeping survivors in ascending original order.

    Returns the restricted automaton and the ``old -> new`` index mapping.
    """
    kept = sorted(reachable_states(m))
    mapping = {old: new for new, old in enumerate(kept)}
    delta = [[mapping[t] for t in m.delta[old]] for old in kept]
    return Automaton(m.alphabet, len(kept), mapping[m.initial], delta), mapping


@dataclass(frozen=True)
class ProductAutomaton:
    automaton: Automaton
    pair_of: tuple  # product state -> (state of M1, state of M2)

    @property
    def index_of(self) -> dict:
        return {p: i for i, p in enumerate(self.pair_of)}

    def project(self, states: Iterable[int], side: int) -> frozenset:
        """Image of ``states`` in the first (side 0) or second (side 1) factor."""
        return frozenset(self.pair_of[s][side] for s in states)


def product(m1: Automaton, m2: Automaton) -> ProductAutomaton:
    """Reachable part of ``m1 × m2``; pair states are numbered in BFS discovery order."""
    if m1.alphabet != m2.alphabet:
        raise InputError(f"alphabet mismatch: {''.join(m1.alphabet)!r} vs {''.join(m2.alphabet)!r}")
    d1, d2 = m1.delta, m2.delta
    start = (m1.initial, m2.initial)
    index = {start: 0}
    pairs = [start]
    delta = []
    k = len(m1.alphabet)
    i = 0
    while i < len(pairs):
        q1, q2 = pairs[i]
        row1, row2 = d1[q1], d2[q2]
        row = []
        for a in range(k):
            p = (row1[a], row2[a])
            j = index.get(p)
            if j is None:
                j = index[p] = len(pairs)
                pairs.append(p)
            row.append(j)
        delta.append(row)
        i += 1
    return ProductAutomaton(Automaton(m1.alphabet, len(pairs), 0, delta), tuple(pairs))


def graph_sccs(m: Automaton, allowed: Optional[Iterable[int]] = None) -> list:
    """Strongly connected components of the transition graph (Tarjan, iterative).

    With ``allowed`` the search runs on the induced subgraph.  Components come
    out in Tarjan's completion order, roots tried in ascending state order.
    """
    n = m.state_count
    if allowed is None:
        inside = [True] * n
        roots = range(n)
    else:
        inside = [False] * n
        for q in allowed:
            inside[q] = True
        roots = [q for q in range(n) if inside[q]]
    # Distinct in-scope successors, in symbol order.
    succ = []
    for q in range(n):
        if inside[q]:
            seen = []
            for t in m.delta[q]:
                if inside[t] and t not in seen:
                    seen.append(t)
            succ.append(seen)
        else:
            succ.append(())

    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    result = []
    counter = 0
    for root in roots:
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            nbrs = succ[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    members.append(w)
                    if w == v:
                        break
                nontrivial = len(members) > 1 or v in succ[v]
                result.append(StateSet(frozenset(members), nontrivial))
    return result


def _bfs_words(m: Automaton, source: int, inside=None) -> dict:
    """Map each state reachable from ``source`` to its length-lex least access word.

    ``inside`` restricts the search to a state set (the source included).
    """
    words = {source: ""}
    queue = deque([source])
    alphabet = m.alphabet
    while queue:
        q = queue.popleft()
        base = words[q]
        for a, t in zip(alphabet, m.delta[q]):
            if t not in words and (inside is None or t in inside):
                words[t] = base + a
                queue.append(t)
    return words


def shortest_word_to(m: Automaton, target: int) -> str:
    """Shortest word leading from the initial state to ``target``, least in alphabet order."""
    word = _bfs_words(m, m.initial).get(target)
    if word is None:
        raise PreconditionError(f"state {target} is not reachable from the initial state")
    return word


def _is_strongly_connected(m: Automaton, members: frozenset) -> bool:
    if not members:
        return False
    first = min(members)
    if len(members) == 1:
        return first in m.delta[first]
    if len(_bfs_words(m, first, members)) != len(members):
        return False
    # Reverse reachability inside the set.
    preds = {q: [] for q in members}
    for q in members:
        for t in m.delta[q]:
            if t in preds:
                preds[t].append(q)
    seen = {first}
    queue = deque([first])
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return len(seen) == len(members)


def is_scc(m: Automaton, states: Iterable[int]) -> bool:
    """True iff ``states`` is a nonempty set, strongly connected through
    transitions that never leave it, with at least one internal edge."""
    members = frozenset(states)
    if any(not 0 <= q < m.state_count for q in members):
        return False
    return _is_strongly_connected(m, members)


def witness(m: Automaton, component: Iterable[int]) -> UPWord:
    """An ultimately periodic word whose run visits exactly ``component`` infinitely often.

    ``m`` must have every state reachable.  The anchor is the least state of
    the component; the loop visits the other members in ascending order.
    """
    members = frozenset(component)
    if not _is_strongly_connected(m, members):
        raise PreconditionError(f"{sorted(members)} is not a nontrivial strongly connected set")
    anchor = min(members)
    u = shortest_word_to(m, anchor)
    if len(members) == 1:
        for a, t in zip(m.alphabet, m.delta[anchor]):
            if t == anchor:
                return UPWord(u, a)
    from_anchor = _bfs_words(m, anchor, members)
    parts = []
    for q in sorted(members - {anchor}):
        parts.append(from_anchor[q])
        parts.append(_bfs_words(m, q, members)[anchor])
    return UPWord(u, "".join(parts))


def inf_set(m: Automaton, q: int, w: UPWord) -> frozenset:
    """States visited infinitely often by the run from ``q`` on ``w``."""
    delta, index = m.delta, m._index
    period = []
    for pos, a in enumerate(w.period):
        i = index.get(a)
        if i is None:
            m.symbol_index(a, len(w.prefix) + pos)
        period.append(i)
    state = run_finite(m, q, w.prefix)
    first_seen = {}
    starts = []
    while state not in first_seen:
        first_seen[state] = len(starts)
        starts.append(state)
        for i in period:
            state = delta[state][i]
    visited = set()
    for start in starts[first_seen[state]:]:
        s = start
        for i in period:
            s = delta[s][i]
            visited.add(s)
    return frozenset(visited)
