"""Signed (total) Roman domination toolkit.

Exact solvers (exhaustive enumeration, branch and bound), two ILP
formulations with LP/MPS emission and an LP-relaxation equivalence
mapping, a CP formulation emitter, a variable neighborhood search
heuristic, instance generators, and a CLI experiment harness.
"""

from .domination import (
    ProblemKind,
    format_assignment,
    guard_condition_holds,
    is_feasible,
    is_instance_feasible,
    neighborhood_sum,
    parse_assignment,
    weight,
)
from .exact import SolveResult, SolveStatus, branch_and_bound, brute_force
from .graphs import (
    Graph,
    InstanceLabel,
    build_from_label,
    generate_bipartite,
    generate_grid,
    generate_net,
    generate_random,
    load_edge_list,
    parse_edge_list,
)
from .vns import PenaltyBreakdown, VnsParams, improvement_probing, initialize, local_search, penalty, run_vns, shake

__all__ = [
    "Graph",
    "InstanceLabel",
    "PenaltyBreakdown",
    "ProblemKind",
    "SolveResult",
    "SolveStatus",
    "VnsParams",
    "branch_and_bound",
    "brute_force",
    "build_from_label",
    "format_assignment",
    "generate_bipartite",
    "generate_grid",
    "generate_net",
    "generate_random",
    "guard_condition_holds",
    "improvement_probing",
    "initialize",
    "is_feasible",
    "is_instance_feasible",
    "load_edge_list",
    "local_search",
    "neighborhood_sum",
    "parse_assignment",
    "parse_edge_list",
    "penalty",
    "run_vns",
    "shake",
    "weight",
]

__version__ = "0.1.0"
