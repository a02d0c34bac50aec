"""Mycielskian graphs and their topological indices, with verification.

The package builds the Mycielskian of a simple connected graph, computes
degree- and distance-based indices (Wiener, first Zagreb, Randić, degree
distance), evaluates the closed-form degree distance of the Mycielskian
of a diameter-2 graph and sandwich bounds for its Randić index, and
machine-checks all of those closed forms against brute-force BFS oracles
over exhaustive and randomized corpora.
"""

from .errors import (
    DiameterNotTwoError,
    DisconnectedError,
    EdgeListParseError,
    GraphError,
    InvalidParameterError,
    MatrixMismatchError,
    NoEdgesError,
    SelfLoopError,
    TooLargeError,
    TooSmallError,
    VertexOutOfRangeError,
)
from .generators import (
    FamilySpec,
    complete,
    complete_bipartite,
    cycle,
    enumerate_connected,
    erdos_renyi_connected,
    generate,
    path,
    petersen,
    star,
)
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    degree_extremes,
    diameter,
    format_edge_list,
    from_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .indices import (
    IndexReport,
    RandicBounds,
    dd_mycielskian_closed,
    degree_distance,
    distance2_degree_sum,
    first_zagreb,
    index_report,
    randic,
    randic_bounds,
    wiener,
)
from .transform import (
    MycielskianLayout,
    mu_degree,
    mu_distance,
    mu_distance_matrix,
    mycielskian,
)
from .verify import (
    CLAIM_IDS,
    Failure,
    VerificationOutcome,
    verify_corpus,
    verify_lemma3,
    verify_observation1,
    verify_observation2,
    verify_randic_bounds,
    verify_theorem_dd,
)

__version__ = "0.1.0"
