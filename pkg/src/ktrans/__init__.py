"""k-transitive closures of oriented digraphs, with certificates and closed forms."""

from .closure import (
    ClosureCapError,
    ClosureExists,
    ClosureNotExists,
    ClosureResult,
    DerivationWitness,
    k_closure,
    replay_certificate,
    replay_failure,
)
from .digraph import (
    Arc,
    ArcConflictError,
    DegreeProfile,
    OrientedDigraph,
    add_arc,
    degree_profile,
    induced_subgraph,
    make_cycle,
    make_path,
)
from .formats import (
    ParseError,
    parse_edge_list,
    parse_json_graph,
    render_dot,
    render_edge_list,
    render_json_graph,
)
from .oracles import (
    ViolationReport,
    all_oriented_digraphs,
    check_k_transitive,
    exhaustive_minimal_closure,
    has_closed_walk,
)
from .pathformulas import (
    PathParams,
    Rational,
    decompose,
    degree_counts,
    density,
    density_limit,
    edge_count,
    indegree_sequence,
    is_oriented_irregular,
    is_regular,
    outdegree_sequence,
    path_closure_arcs,
    path_closure_graph,
    total_degree_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcConflictError",
    "ClosureCapError",
    "ClosureExists",
    "ClosureNotExists",
    "ClosureResult",
    "DegreeProfile",
    "DerivationWitness",
    "OrientedDigraph",
    "ParseError",
    "PathParams",
    "Rational",
    "ViolationReport",
    "add_arc",
    "all_oriented_digraphs",
    "check_k_transitive",
    "decompose",
    "degree_counts",
    "degree_profile",
    "density",
    "density_limit",
    "edge_count",
    "exhaustive_minimal_closure",
    "has_closed_walk",
    "indegree_sequence",
    "induced_subgraph",
    "is_oriented_irregular",
    "is_regular",
    "k_closure",
    "make_cycle",
    "make_path",
    "outdegree_sequence",
    "parse_edge_list",
    "parse_json_graph",
    "path_closure_arcs",
    "path_closure_graph",
    "render_dot",
    "render_edge_list",
    "render_json_graph",
    "replay_certificate",
    "replay_failure",
    "total_degree_sequence",
]
