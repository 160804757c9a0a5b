"""
Graphs, bitmask vertex sets, and the graph6 line format
=======================================================

A tour of the core objects: building graphs, reading the compact graph6
encoding, and the basic structural queries everything else builds on.
"""

from domlab import (
    Graph,
    closed_neighborhood,
    distance,
    girth,
    is_connected,
    mask_of,
    parse_graph6,
    set_of,
    to_graph6,
)
from domlab.catalog import cycle_graph, named_graph, path_graph, special_graph

# A graph is an order plus an edge list; vertices are 0..n-1.
house = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
print("house edges:", list(house.edges()))
print("house girth:", girth(house))
print("house connected:", is_connected(house))

# Vertex sets are plain integer bitmasks; mask_of/set_of convert.
s = mask_of([0, 2])
print("N[{0,2}] =", set_of(closed_neighborhood(house, s)))

# graph6 is the one-line ASCII serialization used for corpora.
line = to_graph6(house)
print("graph6:", line)
assert parse_graph6(line) == house

# "Ch" is the path on four vertices.
print("Ch decodes to:", list(parse_graph6("Ch").edges()))

# Distances come from breadth-first search; infinity across components.
c7 = cycle_graph(7)
print("distance around C7 from 0 to 3:", distance(c7, 0, 3))

# The catalog knows named families and the five special graphs.
print("P10 order/girth:", special_graph("P10").n, girth(special_graph("P10")))
print("corona of P3, via the grammar:", to_graph6(named_graph("corona-of:path:3")))
print("P4 == named:path:4:", parse_graph6("Ch") == path_graph(4))
