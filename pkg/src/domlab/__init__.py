"""domlab: domination invariants, graph products, and exhaustive
verification of structural theorems on small graphs.

The central objects are :class:`~domlab.graphs.Graph` (bitset adjacency,
vertices 0..n-1) and plain integer bitmasks for vertex sets.
"""

from .graphs import (
    Graph,
    closed_neighborhood,
    distance,
    girth,
    is_connected,
    is_triangle_free,
    iter_bits,
    mask_of,
    open_neighborhood,
    set_of,
)
from .graph6 import Graph6Error, load_graph6_file, parse_graph6, save_graph6_file, to_graph6
from .isomorphism import are_isomorphic, canonical_graph, canonical_key
from .catalog import (
    complete_graph,
    corona,
    cycle_graph,
    named_graph,
    path_graph,
    special_graph,
    triangle_free_well_dominated_catalog,
)
from .domination import (
    DominationProfile,
    domination_number,
    domination_profile,
    greedy_maximal_independent,
    greedy_minimal_dominating,
    independence_number,
    independent_domination_number,
    is_dominating,
    is_minimal_dominating,
    is_open_irredundant,
    is_two_packing,
    is_well_covered,
    is_well_dominated,
    isolatable_vertices,
    maximal_independent_sets,
    minimal_dominating_sets,
    minimum_dominating_set,
    open_irredundant_minimum_dominating,
    private_neighbors,
    total_domination_numbers,
    upper_domination_number,
)
from .products import ProductGraph, cartesian, direct, disjunctive, product
from .classify import (
    CoronaDecomposition,
    PCPartition,
    basic_five_cycles,
    check_pc_well_dominated,
    classify_small_triangle_free,
    corona_decomposition,
    pc_partition,
    universal_vertices,
)
from .enumeration import all_graphs, connected_graphs, enumerate_connected
from .theorems import THEOREMS, Verdict, check_instance
from .verify import CorpusSpec, PairCorpusSpec, VerificationReport, verify_corpus

__version__ = "0.1.0"
