"""Desk-scale search and verification toolkit for trace bounds.

Core objects: SetSystem (bitmask ranges over a ground set of at most 64
elements), Graph, Permutation and PermutationFamily.  On top of them sit
exact shatter statistics, push-down compression, closed-form bound tables,
the explicit extremal constructions, exact branch-and-bound searches, and
the inversion-pair reduction from permutation families to set systems.
"""

from .bounds import (
    BoundsRow,
    evaluate_T_recursion,
    lambda_,
    sauer_bound,
    table1,
    theorem1_bound,
    turan_edges,
    upsilon,
    zeta,
)
from .compression import dominates, normalize, normalize_with_stats, pushdown
from .constructions import (
    family_identity_perturbed,
    family_independent_swaps,
    family_single_swap,
    graph_to_system,
    incidence_graph,
    lambda_construction,
    system_to_graph,
    turan_graph,
    vc_remark_system,
)
from .graphs import Graph, format_graph, girth, induced_edge_count, max_induced_edges, parse_graph
from .permsearch import perm_extremal_exact
from .perms import (
    Permutation,
    PermutationFamily,
    ReductionOutput,
    build_reduction,
    contains,
    decompose_step,
    distinguishing_pair,
    format_family,
    inversions,
    parse_family,
    phi_value,
    phi_witness,
    restriction,
    verify_lemma3,
)
from .search import (
    SearchResult,
    UnsupportedScaleError,
    dedekind_count,
    enumerate_ideal_systems,
    ex_exact,
    extremal_ideal_exact,
    verify_bollobas_radcliffe,
    verify_lemma2,
)
from .setsystem import (
    SetSystem,
    ShatterProfile,
    bondy_distinguishing_set,
    format_set_system,
    is_ideal,
    parse_set_system,
    shatter_profile,
    shatter_value,
    shatter_witness,
    trace,
    vc_dimension,
)

__version__ = "0.1.0"
