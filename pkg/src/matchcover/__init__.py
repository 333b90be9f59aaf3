"""Matching-cover analysis of small graphs.

Graphs in canonical form with graph6/edge-list/DOT formats, exact maximum
matchings (blossom search plus exhaustive oracles), allowed-edge and
matching covered predicates with constructive witnesses, and deterministic
property sweeps over graph populations.
"""

from .graph import (
    Edge,
    EdgeListParseError,
    Graph,
    Graph6ParseError,
    ParseError,
    bipartition,
    delete_edge,
    delete_vertices,
    distance,
    distance_to_set,
    drop_isolated,
    edge,
    incident_edges,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_dot,
    to_graph6,
)
from .matching import (
    BindingError,
    GuardExceededError,
    Matching,
    MatchingSet,
    brute_force_matching_number,
    covered_and_missed,
    enumerate_maximum_matchings,
    has_perfect_matching,
    is_perfect,
    matching_number,
    matchings_containing,
    maximum_matching,
)
from .cover import (
    CoverReport,
    RefutationError,
    WitnessSequence,
    analyze,
    allowed_edges,
    allowed_edges_enumerated,
    core_subgraph,
    find_dominated_edge,
    is_allowed,
    is_matching_covered,
    is_minimal_matching_covered,
    lemma1_witness,
    minimize,
    minimize_with_trace,
    mu,
    theorem_witness_sequence,
)
from .sweep import (
    PROPERTY_NAMES,
    SweepConfig,
    SweepReport,
    enumerate_labeled_graphs,
    ingest_graph6_stream,
    random_graph,
    run_sweep,
    sweep_graphs,
)

__version__ = "0.1.0"
