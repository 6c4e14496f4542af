"""Polynomial-time inclusion, equivalence and right congruence for
deterministic Büchi, coBüchi, parity and Muller acceptors."""
from .acceptors import (Acceptor, Buchi, CoBuchi, EquivVerdict, Muller, Parity, Verdict, accepts,
                        complement_ba_ca, min_color_inf, prune_muller, rebase, split_muller, to_dpa)
from .automata import (Automaton, ProductAutomaton, StateSet, UPWord, graph_sccs, inf_set, product,
                       restrict_reachable, run_finite, shortest_word_to, witness)
from .dma import include_dba_dma, include_dma, include_single_dma, equiv_dma, scc_to_dba
from .dpa import colors, equiv_ba_ca, equiv_dpa, include_ba_ca, include_dpa
from .errors import InputError, PreconditionError
from .inclusion import equiv, include
from .rightcon import RightConResult, right_con, same_class
from .textio import format_word, parse_acceptor, parse_automaton, parse_word, serialize_acceptor

__version__ = "0.1.0"
