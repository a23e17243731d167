"""One-step certification: solve for a local flow and verify flow, current and transition matrix."""

from dataclasses import dataclass

import numpy as np

from .current import current_from_flow, stochastic_from_flow, verify_current, verify_stochastic
from .flow import build_flow_network, capacity_mode, extract_flow_matrix, max_flow, solve_flow_lp, verify_flow
from .quantum import probabilities, step
from .report import Report

SOLVERS = ("maxflow", "lp")
CAPACITIES = ("unit", "amplitude")


@dataclass
class StepCertificate:
    P: np.ndarray
    P_prime: np.ndarray
    flow: np.ndarray
    current: np.ndarray
    stochastic: np.ndarray
    flow_report: Report
    current_report: Report
    stochastic_report: Report
    max_flow_value: float = None

    @property
    def passed(self):
        return self.flow_report.passed and self.current_report.passed and self.stochastic_report.passed

    def to_dict(self):
        out = {
            "P": self.P.tolist(),
            "P_prime": self.P_prime.tolist(),
            "flow": self.flow.tolist(),
            "current": self.current.tolist(),
            "stochastic": self.stochastic.tolist(),
            "flow_checks": self.flow_report.to_records(),
            "current_checks": self.current_report.to_records(),
            "stochastic_checks": self.stochastic_report.to_records(),
            "pass": self.passed,
        }
        if self.max_flow_value is not None:
            out["max_flow_value"] = self.max_flow_value
        return out


def solve_flow(P, P_prime, g, solver="maxflow", capacity="unit", objective="max_stationary", operator=None):
    """Flow matrix from either solver; returns ``(f, max_flow_value_or_None)``."""
    if solver == "maxflow":
        net = build_flow_network(P, P_prime, g)
        if capacity != "unit":
            net = capacity_mode(net, capacity, operator)
        result = max_flow(net)
        return extract_flow_matrix(net, result.arc_flows), result.value
    if solver == "lp":
        if capacity != "unit":
            raise ValueError("amplitude capacities are only supported by the max-flow solver")
        return solve_flow_lp(P, P_prime, g, objective), None
    raise ValueError(f"unknown solver {solver!r}; expected one of {SOLVERS}")


def certify_step(P, P_prime, g, solver="maxflow", capacity="unit", objective="max_stationary",
                 operator=None, tol=1e-9):
    """Solve and verify one step.

    Raises :class:`~qwflow.exceptions.InfeasibleFlowError` when no local flow
    exists; verification failures are reported, not raised.
    """
    P = np.asarray(P, dtype=float)
    P_prime = np.asarray(P_prime, dtype=float)
    f, value = solve_flow(P, P_prime, g, solver, capacity, objective, operator)
    J = current_from_flow(f)
    S = stochastic_from_flow(f, P)
    return StepCertificate(
        P=P,
        P_prime=P_prime,
        flow=f,
        current=J,
        stochastic=S,
        flow_report=verify_flow(f, P, P_prime, g, tol),
        current_report=verify_current(J, P, P_prime, g, tol),
        stochastic_report=_stochastic_checks(S, P, P_prime, g, tol),
        max_flow_value=value,
    )


def _stochastic_checks(S, P, P_prime, g, tol):
    report = verify_stochastic(S, g, tol)
    report.add("reproduces_final", np.abs(S @ P - P_prime).max(initial=0.0), tol)
    return report


def simulate(op, state, steps, solver="maxflow", capacity="unit", objective="max_stationary", tol=1e-9):
    """Evolve ``state`` for ``steps`` steps, certifying each one.

    Yields ``(state_after, certificate)`` per step.  Amplitude capacities
    require ``op`` to be a walk operator.
    """
    g = op.graph
    for _ in range(steps):
        new_state = step(op, state)
        cert = certify_step(
            probabilities(state), probabilities(new_state), g,
            solver=solver, capacity=capacity, objective=objective, operator=op, tol=tol,
        )
        yield new_state, cert
        state = new_state
