"""
Inclusion for parity acceptors
==============================

Inclusion fails exactly when some pair of colors (odd on the left, even on the
right) can be the least colors seen infinitely often at the same time.  Büchi
and coBüchi acceptors are recolored with two colors and go through the same
check.
"""

# %%
import random

from omegaincl import (Acceptor, Parity, accepts, colors, equiv_dpa, include_ba_ca, include_dpa,
                       to_dpa, zoo)
from omegaincl.oracle import random_dpa

inf_a = zoo.infinitely_many_a()
everything = zoo.universal_buchi()
print("inf-a within everything:", include_ba_ca(inf_a, everything))
print("everything within inf-a:", include_ba_ca(everything, inf_a))

# %% The Büchi condition as colors, and a second coloring of the same language
dpa = to_dpa(inf_a)
print(dpa.condition)
print(equiv_dpa(dpa, Acceptor(inf_a.automaton, Parity([4, 3]))))

# %% Asking for specific least colors directly
p1 = Acceptor(zoo.fig1(), Parity([1, 2, 3, 0]))
for k in range(4):
    print(k, colors(p1, p1, k, k))

# %% Random pairs: every negative answer carries a checkable counterexample
rng = random.Random(0)
for _ in range(5):
    a, b = random_dpa(rng, 4), random_dpa(rng, 4)
    v = include_dpa(a, b)
    if v.included:
        print("included")
    else:
        print("not included:", v.witness, accepts(a, v.witness), accepts(b, v.witness))
