# -*- encoding: utf-8 -*-
"""
Identifying codes in graphs
"""
from .exceptions import (
    UserError, InputError, DegenerateInstanceError, InfeasibleError,
    TwinsError, CapExceededError, SolverError
)
from .configuration import Configuration
from .graph_core import (
    Graph, VertexSet, IntervalRep, closed_neighborhood,
    neighborhood_symmetric_difference, find_twins, is_bipartite, is_c4_free,
    girth, is_chordal_bipartite, random_graph, random_interval_graph,
    interval_graph, read_edge_list, write_edge_list
)
from .code_core import (
    Code, Verdict, verify_identifying_code, verify_discriminating_code,
    exact_min_id_code, exact_min_discriminating_code, exact_min_set_cover,
    greedy_id_code, log_lower_bound
)
from .vc_dim import (
    is_shattered, vc_dimension, sauer_lower_bound, code_from_shattered,
    witness_search
)
from .constructions import (
    c4_free_bipartite_family, vc_d_bipartite_family, path_graph
)
from .lp_solver import LinearProgram, LpSolution, solve_lp
from .interval_approx import (
    canonicalize, windows, build_programs, solve_inter, solve_disj,
    greedy_stab, approx_id_code_interval, opt_fractional, read_intervals
)
from .reductions import (
    SetCover1Instance, one_factorization, build_dc_instance,
    build_ic_instance, setcover_to_dc_solution, dc_solution_to_setcover,
    setcover_to_ic_solution, ic_solution_to_setcover, read_setcover
)


def version():
    "Version string from the packaged configuration"
    return Configuration().version
