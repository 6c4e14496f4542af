"""Kind-dispatching entry points for inclusion and equivalence."""
from __future__ import annotations

from .acceptors import Acceptor, EquivVerdict, Verdict, to_dpa, two_way
from .dma import include_dma
from .dpa import include_dpa
from .errors import InputError


def include(a1: Acceptor, a2: Acceptor) -> Verdict:
    """Decide ``L(a1) ⊆ L(a2)``.

    Büchi, coBüchi and parity operands mix freely; Muller acceptors can only be
    compared with Muller acceptors.
    """
    if a1.alphabet != a2.alphabet:
        raise InputError(f"alphabet mismatch: {''.join(a1.alphabet)!r} vs {''.join(a2.alphabet)!r}")
    muller = (a1.kind == "dma", a2.kind == "dma")
    if all(muller):
        return include_dma(a1, a2)
    if any(muller):
        raise InputError(
            f"cannot compare {a1.kind} with {a2.kind}: convert the non-Muller operand "
            "to a Muller acceptor first")
    return include_dpa(to_dpa(a1), to_dpa(a2))


def equiv(a1: Acceptor, a2: Acceptor) -> EquivVerdict:
    return two_way(include, a1, a2)
