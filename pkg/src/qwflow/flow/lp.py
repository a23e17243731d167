"""Local flows as solutions of a linear program over the edge variables."""

import numpy as np

from ..exceptions import InfeasibleFlowError
from ..validation import check_probability_vector
from .simplex import simplex

OBJECTIVES = ("max_stationary", "none")


def flow_constraints(P, P_prime, g):
    """Equality system over edge variables ``f[m, n]`` (one per edge ``n -> m``).

    Rows are the N column sums followed by the first N-1 row sums; the last
    row sum is implied by the others because both distributions total one.

    Returns
    -------
    A : ndarray of shape (2N - 1, |E|)
    b : ndarray of shape (2N - 1,)
    edges : list of (n, m)
    """
    n = g.n_vertices
    edges = g.sorted_edges()
    A = np.zeros((2 * n - 1, len(edges)))
    for j, (source, target) in enumerate(edges):
        A[source, j] = 1.0
        if target < n - 1:
            A[n + target, j] = 1.0
    b = np.concatenate([P, P_prime[:-1]])
    return A, b, edges


def solve_flow_lp(P, P_prime, g, objective="max_stationary"):
    """Local flow from ``P`` to ``P_prime`` by simplex.

    With ``objective="max_stationary"`` the returned flow maximizes the
    probability that stays put, ``sum_n f[n, n]``; with ``"none"`` the first
    feasible vertex found is returned.  Ties between optimal vertices are
    broken by the deterministic pivoting order.

    Raises
    ------
    InfeasibleFlowError
        If no flow satisfies the constraints.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}; expected one of {OBJECTIVES}")
    n = g.n_vertices
    P = np.clip(check_probability_vector(P, n, name="P"), 0.0, None)
    P_prime = np.clip(check_probability_vector(P_prime, n, name="P_prime"), 0.0, None)
    A, b, edges = flow_constraints(P, P_prime, g)
    c = np.zeros(len(edges))
    if objective == "max_stationary":
        c = -np.array([1.0 if s == t else 0.0 for s, t in edges])
    result = simplex(c, A, b)
    if result.status != "optimal":
        raise InfeasibleFlowError(message=f"flow linear program is {result.status}")
    f = np.zeros((n, n))
    for (source, target), value in zip(edges, result.x):
        f[target, source] = value
    return f
