"""
Domination invariants and the drop-greedy procedure
===================================================

Profiles collect gamma, Gamma, i, alpha and the total-domination pair, plus
the well-dominated / well-covered verdicts.  On a well-dominated graph the
simple drop-greedy procedure always lands on a minimum dominating set, no
matter the processing order.
"""

import random

from domlab import (
    domination_profile,
    greedy_minimal_dominating,
    is_minimal_dominating,
    minimal_dominating_sets,
    set_of,
)
from domlab.catalog import cycle_graph, path_graph, special_graph

for label, g in [("P3", path_graph(3)), ("C7", cycle_graph(7)), ("H1", special_graph("H1"))]:
    prof = domination_profile(g)
    print(f"{label}: gamma={prof.gamma} Gamma={prof.upper_gamma} "
          f"i={prof.ind_dom} alpha={prof.alpha} "
          f"well_dominated={prof.well_dominated} well_covered={prof.well_covered}")

# P4 has exactly four minimal dominating sets, all of size two.
print("\nminimal dominating sets of P4:")
for s in minimal_dominating_sets(path_graph(4)):
    print("  ", set_of(s))

# The drop-greedy procedure: start from all vertices, process them in some
# order, and drop a vertex whenever the remainder still dominates.
rng = random.Random(11)
c7 = cycle_graph(7)
print("\ndrop-greedy on C7 under five random orders:")
for _ in range(5):
    order = list(range(7))
    rng.shuffle(order)
    d = greedy_minimal_dominating(c7, order)
    assert is_minimal_dominating(c7, d)
    print(f"  order {order} -> {set_of(d)} (size {d.bit_count()})")
print("C7 is well-dominated, so the size is always gamma = 3.")

# On a graph that is not well-dominated the size depends on the order.
p3 = path_graph(3)
print("\ndrop-greedy on P3:")
for order in ([0, 1, 2], [1, 0, 2]):
    d = greedy_minimal_dominating(p3, order)
    print(f"  order {order} -> {set_of(d)}")
