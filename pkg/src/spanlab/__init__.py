"""Vertex spans of simple connected graphs.

Two actors walk a graph, each must visit every vertex, and they want to
stay as far apart as possible at every step.  The best achievable safety
distance depends on the movement rule (each may stay / both must move /
exactly one moves) and is computed here exactly, with witness walks and an
independent brute-force oracle.
"""

from . import families, io, verify
from .engine import (
    MoveAttribution,
    SpanReport,
    TrackPair,
    TrackValidation,
    compute_span,
    direct_to_lazy,
    extract_witness_tracks,
    lazy_to_direct,
    move_attribution,
    validate_tracks,
)
from .families import FamilySpec, expected_spans, generate, named_graph
from .errors import (
    BadCharError,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeListSyntaxError,
    EmptyGraphError,
    InvalidTracksError,
    LengthMismatchError,
    NotABridgeError,
    NotActiveConformantError,
    NotLazyConformantError,
    OrderTooSmallError,
    ParameterOutOfRangeError,
    SelfLoopError,
    SpanlabError,
    ThresholdTooLargeError,
    TooLargeError,
    UnknownGraphIdError,
    VertexOutOfRangeError,
)
from .graph import (
    BridgeSplit,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bridges,
    build_graph,
    diameter,
    eccentricity,
    radius,
    split_at_bridge,
)
from .io import (
    emit_edge_list,
    emit_graph6,
    emit_witness_dot,
    parse_edge_list,
    parse_graph6,
)
from .product import (
    MovementRule,
    PairGraph,
    build_pair_graph,
    components_with_double_surjectivity,
)
from .verify import (
    EnumerationReport,
    GraphRecord,
    check_graph,
    check_theorems,
    cut_edge_bound,
    enumerate_connected,
    is_isomorphic,
    oracle_span,
    random_graphs,
)

__version__ = "0.1.0"

__all__ = [
    "BadCharError",
    "BridgeSplit",
    "DisconnectedError",
    "DistanceMatrix",
    "DuplicateEdgeError",
    "EdgeListSyntaxError",
    "EmptyGraphError",
    "EnumerationReport",
    "FamilySpec",
    "Graph",
    "GraphRecord",
    "InvalidTracksError",
    "LengthMismatchError",
    "MoveAttribution",
    "MovementRule",
    "NotABridgeError",
    "NotActiveConformantError",
    "NotLazyConformantError",
    "OrderTooSmallError",
    "PairGraph",
    "ParameterOutOfRangeError",
    "SelfLoopError",
    "SpanReport",
    "SpanlabError",
    "ThresholdTooLargeError",
    "TooLargeError",
    "TrackPair",
    "TrackValidation",
    "UnknownGraphIdError",
    "VertexOutOfRangeError",
    "all_pairs_distances",
    "bridges",
    "build_graph",
    "build_pair_graph",
    "check_graph",
    "check_theorems",
    "components_with_double_surjectivity",
    "compute_span",
    "cut_edge_bound",
    "diameter",
    "direct_to_lazy",
    "eccentricity",
    "emit_edge_list",
    "emit_graph6",
    "emit_witness_dot",
    "enumerate_connected",
    "expected_spans",
    "extract_witness_tracks",
    "families",
    "generate",
    "io",
    "is_isomorphic",
    "lazy_to_direct",
    "move_attribution",
    "named_graph",
    "oracle_span",
    "parse_edge_list",
    "parse_graph6",
    "radius",
    "random_graphs",
    "split_at_bridge",
    "validate_tracks",
    "verify",
]
