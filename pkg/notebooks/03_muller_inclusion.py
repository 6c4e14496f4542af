"""
Inclusion for Muller acceptors
==============================

A Muller acceptor lists the exact infinity sets it accepts.  Inclusion is
reduced to one final set at a time, and each of those to Büchi acceptors that
follow a run around the final set in a fixed cyclic order.
"""

# %%
from omegaincl import (Acceptor, Muller, UPWord, accepts, equiv_dma, include_dba_dma, include_dma,
                       scc_to_dba, zoo)
from omegaincl.automata import reachable_states

m = zoo.fig1()

# %% The cyclic Büchi acceptor for F = {0, 1, 2} started at 0
cyc = scc_to_dba(m, {0, 1, 2}, 0)
b = cyc.acceptor.automaton
print("states:", b.state_count)
for s in sorted(reachable_states(b)):
    for sym, t in zip(b.alphabet, b.delta[s]):
        if cyc.name(t) != "d0":
            print(f"  {cyc.name(s)} -{sym}-> {cyc.name(t)}")
print(accepts(cyc.acceptor, UPWord("", "a")), accepts(cyc.acceptor, UPWord("", "ab")))

# %% Büchi against Muller
u = zoo.fig1_muller()
print(include_dba_dma(cyc.acceptor, u))

# %% Muller against Muller
bigger = Acceptor(m, Muller([{0, 1, 2}, {0}]))
print(include_dma(u, bigger))
print(include_dma(bigger, u))
print(equiv_dma(u, Acceptor(m, Muller([{0, 1, 2}, {3}]))))  # {3} is never an infinity set
