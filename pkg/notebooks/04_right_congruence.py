"""
Right congruence
================

Two finite prefixes are equivalent when every infinite continuation is
accepted after one exactly when it is accepted after the other.  The classes
form an automaton; a set of lasso words separates all of them.
"""

# %%
from omegaincl import accepts, right_con, same_class, zoo

start_a = zoo.a_then_anything()
print(same_class(start_a, 1, 2))

r = right_con(start_a)
print("classes:", r.automaton.state_count, r.representatives)
print("distinguishers:", [str(d) for d in r.distinguishers])
for x in r.representatives:
    print(repr(x), [accepts(start_a, d.after(x)) for d in r.distinguishers])

# %% Eventually (bba) forever: the prefix never matters, so one class
window = zoo.bba_window()
print(window.automaton.state_count, "states ->", right_con(window).automaton.state_count, "class")
