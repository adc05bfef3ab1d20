"""Recognition of connected claw-free equimatchable graphs.

The recognizer twin-reduces a graph and matches the quotient against a
small set of fixed base graphs with multiplicity patterns; a brute-force
oracle and exhaustive harness check it against the definition.
"""

from .families import FamilyId, FamilyParams, base_graph, generate, membership_by_definition, pattern_match
from .formats import FormatError, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import (
    Graph,
    TwinReduction,
    connected_components,
    expand,
    is_clique,
    is_cycle_c4,
    is_independent,
    odd_even_component_counts,
    twin_reduce,
    vertex_connectivity_capped,
)
from .isomorphism import all_isomorphisms_small, isomorphic_small
from .kernels import BACKEND
from .matching import (
    MatchingOverflow,
    enumerate_maximal_matchings,
    is_factor_critical,
    is_randomly_matchable,
    maximum_matching,
)
from .oracle import (
    alpha_at_most_2,
    criterion_equimatchable_cfodd,
    exposed_count_profile,
    independence_number,
    is_claw_free,
    is_equimatchable_bruteforce,
)
from .recognizer import Reason, Verdict, classify, explain

__version__ = "0.1.0"
