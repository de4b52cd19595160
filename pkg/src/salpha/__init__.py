"""Normalized-Laplacian power sums and majorization-based eigenvalue bounds."""

from salpha.bounds import (
    BoundReport,
    BoundValue,
    bound_report,
    p_bozkurt,
    theorem1_bound,
    theorem2_bound,
)
from salpha.graph import (
    DegreeSequence,
    Graph,
    GraphClass,
    build_graph,
    classify,
    degree_sequence,
    format_edge_list,
    generate_er_connected,
    generate_random_tree,
    is_connected,
    make_named,
    parse_edge_list,
    prufer_decode,
)
from salpha.majorization import (
    MajorizationInstance,
    SolverResult,
    h_star,
    q_closed_form,
    r_closed_form,
    solve_min_lambda,
)
from salpha.spectral import (
    DerivedScalars,
    Spectrum,
    degree_pair_sum,
    normalized_laplacian,
    s_alpha_star,
    spectrum,
    validate_spectrum,
)

__version__ = "0.1.0"
