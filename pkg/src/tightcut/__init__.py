"""Heuristic and exact solvers for weighted feedback arc and vertex sets.

The core pipeline cuts arc bundles that provably belong to a minimum feedback
arc set because their isolated cycles cannot be broken more cheaply
(ISO-CUT), and falls back to a min-cut guided guess or a randomized vote when
no such bundle exists (TIGHT-CUT, TIGHT-CUT*).
"""

from .cycles import (
    CycleCover,
    ElementaryCycle,
    IsolatedSubgraph,
    cycle_cover,
    enumerate_elementary_cycles,
    find_elementary_cycle,
    isolated_subgraph,
)
from .errors import (
    GraphDomainError,
    GraphParseError,
    ResourceLimitError,
    SolverTimeout,
    TightCutError,
)
from .generators import (
    Instance,
    gen_erdos_renyi,
    gen_perturbed_planar,
    gen_planted,
    gen_tournament,
)
from .graph import (
    INFINITE,
    MultiDigraph,
    antiparallel_bundle,
    is_acyclic,
    parallel_bundle,
    reaches,
    strongly_connected_components,
    total_weight,
    verify_feedback,
    verify_feedback_vertices,
)
from .maxflow import CutResult, max_flow_value, min_st_cut
from .oracle import OracleResult, exact_fas, exact_fvs, greedy_removal
from .reductions import (
    DualGraphResult,
    LineGraphResult,
    dual_graph,
    line_graph,
    solve_fasp_via_line_graph,
    solve_fvsp,
)
from .solver import FeedbackResult, SolverConfig, good_guess, iso_cut, tight_cut, tight_cut_star

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "CutResult",
    "CycleCover",
    "DualGraphResult",
    "ElementaryCycle",
    "FeedbackResult",
    "GraphDomainError",
    "GraphParseError",
    "Instance",
    "IsolatedSubgraph",
    "LineGraphResult",
    "MultiDigraph",
    "OracleResult",
    "ResourceLimitError",
    "SolverConfig",
    "SolverTimeout",
    "TightCutError",
    "antiparallel_bundle",
    "cycle_cover",
    "dual_graph",
    "enumerate_elementary_cycles",
    "exact_fas",
    "exact_fvs",
    "find_elementary_cycle",
    "gen_erdos_renyi",
    "gen_perturbed_planar",
    "gen_planted",
    "gen_tournament",
    "good_guess",
    "greedy_removal",
    "is_acyclic",
    "iso_cut",
    "isolated_subgraph",
    "line_graph",
    "max_flow_value",
    "min_st_cut",
    "parallel_bundle",
    "reaches",
    "solve_fasp_via_line_graph",
    "solve_fvsp",
    "strongly_connected_components",
    "tight_cut",
    "tight_cut_star",
    "total_weight",
    "verify_feedback",
    "verify_feedback_vertices",
]
