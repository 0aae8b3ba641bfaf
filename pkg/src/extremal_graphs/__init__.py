"""Free vertices, diameter and vertex connectivity of small simple graphs.

Computes the invariants, builds and recognises the graphs attaining
``free_count + diameter == n + 2 - kappa``, and checks the classification
exhaustively on all small connected graphs.
"""

from .families import (
    FqSpec,
    GdSpec,
    build_fq,
    build_gamma,
    build_gd,
    build_omega,
    parse_fq_spec,
    parse_gd_spec,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    InvalidParameterError,
    complete_graph,
    cycle_graph,
    decode_graph6,
    disjoint_union,
    empty_graph,
    encode_graph6,
    format_edgelist,
    induced_subgraph,
    join,
    parse_edgelist,
    path_graph,
    union,
)
from .invariants import (
    INF,
    InvariantReport,
    UndefinedInvariantError,
    all_pairs_distance,
    chordality,
    diameter,
    free_vertices,
    invariant_report,
    kappa,
    kappa_bruteforce,
)
from .recognize import (
    FqCertificate,
    FqMember,
    GdCertificate,
    GdMember,
    InvalidSequenceError,
    NotExtremal,
    PreconditionError,
    certificate_problems,
    check_equality,
    classify,
    predicted_depth,
    realizable_sequence,
    witness_for_sequence,
)
from .verify import (
    VerificationSummary,
    enumerate_connected,
    verify_classification,
    verify_sequences,
)

__version__ = "0.1.0"
