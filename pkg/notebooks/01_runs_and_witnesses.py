"""
Runs, infinity sets and lasso witnesses
=======================================

A deterministic automaton reads an infinite word ``u v v v ...``.  The states
it visits infinitely often form a strongly connected set, and conversely any
such set can be hit exactly by some lasso-shaped word.
"""

# %%
from omegaincl import UPWord, graph_sccs, inf_set, run_finite, shortest_word_to, witness, zoo

m = zoo.fig1()
print("transitions:", m.delta)

# %% Finite runs and shortest access words
print(run_finite(m, 0, "aa"), run_finite(m, 0, "abb"))
for q in m.states:
    print(q, repr(shortest_word_to(m, q)))

# %% Infinity sets of a few lasso words
for text in ["(a)", "(b)", "ab(b)", "(ab)", "(bab)"]:
    u, v = text[:-1].split("(")
    print(text, sorted(inf_set(m, 0, UPWord(u, v))))

# %% Strong components; the whole automaton is one of them
for comp in graph_sccs(m):
    print(sorted(comp.members), "nontrivial" if comp.nontrivial else "trivial")

# %% Witness: a word whose infinity set is exactly the requested component
w = witness(m, {0, 1, 2})
print(w, sorted(inf_set(m, 0, w)))
