"""Right-congruence automata of deterministic omega acceptors."""
from __future__ import annotations

from dataclasses import dataclass

from .acceptors import Acceptor, EquivVerdict, rebase
from .automata import Automaton, run_finite
from .errors import InputError
from .inclusion import equiv


@dataclass(frozen=True)
class RightConResult:
    automaton: Automaton
    representatives: tuple  # access word of each state, "" for the initial one
    distinguishers: tuple  # witnesses in order of discovery, without repeats


def same_class(a: Acceptor, q1: int, q2: int) -> EquivVerdict:
    """Compare the languages accepted from ``q1`` and from ``q2``.

    On a negative answer the witness is accepted from exactly one of the two
    states; ``direction`` says which (``left-only`` means from ``q1``).
    """
    n = a.automaton.state_count
    for q in (q1, q2):
        if not 0 <= q < n:
            raise InputError(f"state {q} out of range 0..{n - 1}")
    if q1 == q2:
        return EquivVerdict(True)
    return equiv(rebase(a, q1), rebase(a, q2))


def right_con(a: Acceptor) -> RightConResult:
    m = a.automaton
    memo = {}

    def compare(p, q):
        key = (p, q) if p <= q else (q, p)
        if key not in memo:
            memo[key] = same_class(a, *key)
        return memo[key]

    reps = [""]
    reached = [m.initial]  # state of the input acceptor behind each class
    delta = []
    found = {}
    i = 0
    while i < len(reps):
        row = []
        for sym in m.alphabet:
            target = m.step(reached[i], sym)
            dest = None
            seen = []
            for j, q in enumerate(reached):
                verdict = compare(target, q)
                if verdict.equivalent:
                    dest = j
                    break
                seen.append(verdict.witness)
            if dest is None:
                dest = len(reps)
                reps.append(reps[i] + sym)
                reached.append(target)
                for w in seen:
                    found.setdefault(w, None)
            row.append(dest)
        delta.append(row)
        i += 1
    return RightConResult(Automaton(m.alphabet, len(reps), 0, delta), tuple(reps), tuple(found))


def class_of(result: RightConResult, x: str) -> int:
    return run_finite(result.automaton, result.automaton.initial, x)
