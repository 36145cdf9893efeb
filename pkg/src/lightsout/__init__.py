"""Lights Out nullity calculus over GF(2).

Solvability, activation classification, star edge edits with predicted
nullity changes, and exhaustive desk-scale verification of the calculus.
"""

from . import edgecalc, oracle
from .analysis import (
    AO,
    HO,
    NO,
    ActivationClass,
    AnalysisSummary,
    classify_set,
    classify_vertices,
    is_always_solvable,
    nullity,
    odd_dominating_patterns,
    solve_configuration,
    summarize,
    unsolvability_certificate,
)
from .errors import CapacityError, InputError, LightsOutError, PreconditionError
from .gf2 import (
    AffineSolutionSet,
    BitMatrix,
    BitVector,
    enumerate_solutions,
    kernel_basis,
    parity,
    rank,
    solve_linear,
)
from .graph import (
    Graph,
    StarSpec,
    closed_neighborhood_matrix,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    from_graph6,
    generate_named,
    graph_index,
    grid_graph,
    labeled_graph,
    parse_graph,
    path_graph,
    star_operation,
    to_graph6,
    toggle_edge,
)

__version__ = "0.1.0"
