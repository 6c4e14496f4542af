"""Acceptance conditions and their semantics on ultimately periodic words."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from .automata import Automaton, UPWord, inf_set, is_scc
from .errors import InputError


@dataclass(frozen=True)
class Buchi:
    final: frozenset

    def __post_init__(self):
        object.__setattr__(self, "final", frozenset(self.final))


@dataclass(frozen=True)
class CoBuchi:
    final: frozenset

    def __post_init__(self):
        object.__setattr__(self, "final", frozenset(self.final))


@dataclass(frozen=True)
class Parity:
    colors: tuple  # colors[q] is the color of state q

    def __post_init__(self):
        colors = tuple(self.colors)
        for c in colors:
            if not isinstance(c, int) or c < 0:
                raise InputError(f"colors must be nonnegative integers, got {c!r}")
        object.__setattr__(self, "colors", colors)


def _family_key(s: frozenset) -> tuple:
    return (len(s), sorted(s))


@dataclass(frozen=True)
class Muller:
    family: tuple  # deduplicated, sorted by size then members

    def __post_init__(self):
        sets = {frozenset(s) for s in self.family}
        object.__setattr__(self, "family", tuple(sorted(sets, key=_family_key)))


Condition = Union[Buchi, CoBuchi, Parity, Muller]

_KINDS = {Buchi: "dba", CoBuchi: "dca", Parity: "dpa", Muller: "dma"}


@dataclass(frozen=True)
class Acceptor:
    automaton: Automaton
    condition: Condition

    def __post_init__(self):
        n = self.automaton.state_count
        cond = self.condition
        if isinstance(cond, (Buchi, CoBuchi)):
            bad = [q for q in cond.final if not 0 <= q < n]
        elif isinstance(cond, Parity):
            if len(cond.colors) != n:
                raise InputError(f"parity condition colors {len(cond.colors)} states, automaton has {n}")
            bad = []
        elif isinstance(cond, Muller):
            bad = [q for s in cond.family for q in s if not 0 <= q < n]
            if any(not s for s in cond.family):
                raise InputError("Muller final sets must be nonempty")
        else:
            raise InputError(f"unknown acceptance condition {cond!r}")
        if bad:
            raise InputError(f"condition refers to states {sorted(set(bad))} outside 0..{n - 1}")

    @property
    def kind(self) -> str:
        return _KINDS[type(self.condition)]

    @property
    def alphabet(self) -> tuple:
        return self.automaton.alphabet


@dataclass(frozen=True)
class Verdict:
    """Answer to an inclusion query; ``witness`` is set exactly when not included."""

    included: bool
    witness: Optional[UPWord] = None

    def __bool__(self) -> bool:
        return self.included


@dataclass(frozen=True)
class EquivVerdict:
    """``direction`` is ``"left-only"`` or ``"right-only"``: which operand accepts the witness."""

    equivalent: bool
    witness: Optional[UPWord] = None
    direction: Optional[str] = None

    def __bool__(self) -> bool:
        return self.equivalent


def two_way(include, a1: Acceptor, a2: Acceptor) -> EquivVerdict:
    """Equivalence from an inclusion routine: check left-in-right, then right-in-left."""
    fwd = include(a1, a2)
    if not fwd.included:
        return EquivVerdict(False, fwd.witness, "left-only")
    bwd = include(a2, a1)
    if not bwd.included:
        return EquivVerdict(False, bwd.witness, "right-only")
    return EquivVerdict(True)


def is_accepting_set(cond: Condition, inf: frozenset) -> bool:
    """Whether a run whose infinity set is ``inf`` is accepting."""
    if isinstance(cond, Buchi):
        return not inf.isdisjoint(cond.final)
    if isinstance(cond, CoBuchi):
        return inf.isdisjoint(cond.final)
    if isinstance(cond, Parity):
        return min(cond.colors[q] for q in inf) % 2 == 1
    return inf in cond.family


def accepts(a: Acceptor, w: UPWord) -> bool:
    m = a.automaton
    return is_accepting_set(a.condition, inf_set(m, m.initial, w))


def min_color_inf(p: Acceptor, w: UPWord) -> int:
    if not isinstance(p.condition, Parity):
        raise InputError(f"expected a parity acceptor, got {p.kind}")
    m = p.automaton
    return min(p.condition.colors[q] for q in inf_set(m, m.initial, w))


def complement_ba_ca(a: Acceptor) -> Acceptor:
    """Swap Büchi and coBüchi acceptance on the same structure; the language is complemented."""
    cond = a.condition
    if isinstance(cond, Buchi):
        return Acceptor(a.automaton, CoBuchi(cond.final))
    if isinstance(cond, CoBuchi):
        return Acceptor(a.automaton, Buchi(cond.final))
    raise InputError(f"complement_ba_ca needs a Büchi or coBüchi acceptor, got {a.kind}")


def to_dpa(a: Acceptor) -> Acceptor:
    """Two-color parity acceptor for the same language.

    Büchi: final states get 1, the rest 2.  coBüchi: final states get 0, the rest 1.
    Parity acceptors are returned unchanged.
    """
    cond = a.condition
    n = a.automaton.state_count
    if isinstance(cond, Buchi):
        colors = [1 if q in cond.final else 2 for q in range(n)]
    elif isinstance(cond, CoBuchi):
        colors = [0 if q in cond.final else 1 for q in range(n)]
    elif isinstance(cond, Parity):
        return a
    else:
        raise InputError(f"to_dpa needs a Büchi or coBüchi acceptor, got {a.kind}")
    return Acceptor(a.automaton, Parity(colors))


def rebase(a: Acceptor, q: int) -> Acceptor:
    """The same acceptor started from state ``q``."""
    m = a.automaton.with_initial(q)
    if m is a.automaton:
        return a
    return replace(a, automaton=m)


def _require_muller(u: Acceptor) -> Muller:
    if not isinstance(u.condition, Muller):
        raise InputError(f"expected a Muller acceptor, got {u.kind}")
    return u.condition


def prune_muller(u: Acceptor) -> Acceptor:
    """Drop final sets that can never be an infinity set of the automaton."""
    cond = _require_muller(u)
    kept = tuple(s for s in cond.family if is_scc(u.automaton, s))
    if len(kept) == len(cond.family):
        return u
    return Acceptor(u.automaton, Muller(kept))


def split_muller(u: Acceptor) -> list:
    """One single-set Muller acceptor per final set, in canonical family order."""
    cond = _require_muller(u)
    if len(cond.family) == 1:
        return [u]
    return [Acceptor(u.automaton, Muller((s,))) for s in cond.family]
