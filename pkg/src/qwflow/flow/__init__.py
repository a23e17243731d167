from .lp import flow_constraints, solve_flow_lp
from .maxflow import MaxFlowResult, edmonds_karp, extract_flow_matrix, max_flow
from .network import FlowNetwork, build_flow_network, capacity_mode
from .simplex import LPResult, simplex
from .verify import verify_flow

__all__ = [
    "FlowNetwork",
    "LPResult",
    "MaxFlowResult",
    "build_flow_network",
    "capacity_mode",
    "edmonds_karp",
    "extract_flow_matrix",
    "flow_constraints",
    "max_flow",
    "simplex",
    "solve_flow_lp",
    "verify_flow",
]
