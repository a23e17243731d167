"""Local probability flows for discrete-time quantum walks on directed graphs."""

from .certify import StepCertificate, certify_step, simulate, solve_flow
from .current import (
    current_from_flow,
    flow_from_current,
    flow_from_stochastic,
    stochastic_from_flow,
    verify_current,
    verify_stochastic,
)
from .estimator import LocalFlowCertifier
from .exceptions import (
    DimensionError,
    InfeasibleFlowError,
    InvalidCutError,
    LocalityError,
    NormalizationError,
    SizeLimitError,
    UnitarityError,
)
from .flow import (
    FlowNetwork,
    build_flow_network,
    capacity_mode,
    extract_flow_matrix,
    max_flow,
    solve_flow_lp,
    verify_flow,
)
from .graph import (
    DirectedGraph,
    ExpansionMap,
    aggregate_current,
    aggregate_probability,
    build_graph,
    expand_internal,
    graph_from_support,
    is_reversible,
)
from .prooflab import CutSpec, cut_value, min_cut_brute, projector_bound
from .quantum import (
    DensityState,
    PureState,
    QuantumChannel,
    WalkOperator,
    coined_line_walk,
    probabilities,
    step,
    step_channel,
    step_pure,
    validate_channel,
    validate_unitary,
)
from .report import Check, Report

__version__ = "0.1.0"
