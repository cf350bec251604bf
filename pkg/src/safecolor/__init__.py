"""Safe vertex colorings: verification, structural decision, and brute-force ground truth."""
from .graph import (
    Graph,
    GraphFormatError,
    complete_bipartite,
    complete_graph,
    components,
    cube_graph,
    cycle_graph,
    disjoint_union,
    gen_double_windmill,
    gen_random_min_deg3,
    induced_subgraph,
    is_connected,
    load_graph,
    min_degree,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    petersen_graph,
    prism_graph,
    remove_vertices,
    to_dimacs,
    to_edge_list,
)
from .safety import (
    ATTACKERS_HOLD_ALL_COLORS,
    NO_RAINBOW_COMPONENT,
    Coloring,
    VerifyResult,
    component_color_sets,
    load_coloring,
    parse_coloring,
    to_coloring_text,
    verify_safe,
)
from .triplets import (
    NeighborhoodProfile,
    Triplet,
    assign_leaves,
    find_three_independent_triplets,
    find_two_independent_triplets,
    is_independent_triplets,
    neighborhood_profile,
    three_centers_test,
    two_centers_test,
)
from .decide import (
    DEFAULT_ORACLE_LIMIT,
    NOT_SAFE,
    OUT_OF_SCOPE,
    SAFE,
    ConstructionError,
    Decision,
    OracleLimitError,
    WindmillShape,
    canonical_colorings,
    construct_safe_3_coloring,
    decide_safe_3,
    oracle_safe_3,
    recognize_double_windmill,
    triplet_coloring,
)

__version__ = "0.1.0"
