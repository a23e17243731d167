"""Conversions between flows, net currents and column-stochastic matrices."""

import numpy as np

from .exceptions import InfeasibleFlowError
from .report import Report
from .validation import check_square, check_vector

POSITIVE_TOL = 1e-12
ZERO_PROBABILITY = 1e-12


def current_from_flow(f):
    """Net current ``J = f - f^T``; antisymmetric with an exactly zero diagonal."""
    f = check_square(f, name="flow")
    return f - f.T


def outflux(J, tol=POSITIVE_TOL):
    """Per-vertex ``sum_{m : J[m, n] > tol} J[m, n]``."""
    return np.where(J > tol, J, 0.0).sum(axis=0)


def verify_current(J, P, P_prime, g, tol=1e-9, positive_tol=POSITIVE_TOL):
    """Check the current-side conditions.

    Entries: ``real``, ``antisymmetry``, ``edge_support`` (``J[m, n] > 0`` only
    on edges ``n -> m``), ``continuity`` (``P'_n - P_n + sum_m J[m, n] = 0``)
    and ``flux_bound`` (positive outflow from ``n`` at most ``P_n``).  Entries
    of ``J`` at or below ``positive_tol`` count as non-positive.
    """
    J = np.asarray(J)
    report = Report()
    imag = np.abs(J.imag).max(initial=0.0) if np.iscomplexobj(J) else 0.0
    report.add("real", imag, tol)
    J = np.real(J).astype(float)
    P = np.asarray(P, dtype=float)
    P_prime = np.asarray(P_prime, dtype=float)
    report.add("antisymmetry", np.abs(J + J.T).max(initial=0.0), tol)
    off_edge = J[~g.adjacency_matrix()]
    report.add("edge_support", off_edge.max(initial=0.0), tol)
    report.add("continuity", np.abs(P_prime - P + J.sum(axis=0)).max(initial=0.0), tol)
    report.add("flux_bound", (outflux(J, positive_tol) - P).max(initial=0.0), tol)
    return report


def flow_from_current(J, P, g=None, tol=1e-9, positive_tol=POSITIVE_TOL):
    """Flow with current ``J``: positive entries off the diagonal, remainder stays put.

    ``f[m, n] = J[m, n]`` where ``J[m, n] > positive_tol`` and ``m != n``, and
    ``f[n, n] = P_n - outflux_n``.  The implied final distribution is
    ``P - J.sum(axis=0)``.

    Raises
    ------
    InfeasibleFlowError
        If some vertex sends out more than ``P_n + tol``.
    """
    J = check_square(J, name="current")
    P = check_vector(P, J.shape[0], name="P")
    if g is not None and g.n_vertices != J.shape[0]:
        raise ValueError("graph size does not match current")
    f = np.where(J > positive_tol, J, 0.0)
    np.fill_diagonal(f, 0.0)
    stay = P - f.sum(axis=0)
    worst = int(np.argmin(stay))
    if stay[worst] < -tol:
        raise InfeasibleFlowError(
            message=f"outflow from vertex {worst} exceeds its probability by {-stay[worst]:.3e}"
        )
    np.fill_diagonal(f, np.clip(stay, 0.0, None))
    return f


def final_distribution(J, P):
    """``P'`` determined by continuity from a current and the initial distribution."""
    return np.asarray(P, dtype=float) - np.asarray(J, dtype=float).sum(axis=0)


def stochastic_from_flow(f, P, zero_probability=ZERO_PROBABILITY):
    """Transition matrix ``S[m, n] = f[m, n] / P_n``.

    Columns with ``P_n <= zero_probability`` become the unit column ``e_n``
    (nothing to move, so the particle is left in place).  Other columns are
    divided by their actual sum, which equals ``P_n`` for a valid flow and
    keeps tiny-probability columns exactly stochastic.
    """
    f = check_square(f, name="flow")
    P = check_vector(P, f.shape[0], name="P")
    S = np.eye(f.shape[0])
    col = f.sum(axis=0)
    live = (P > zero_probability) & (col > 0)
    S[:, live] = f[:, live] / col[live]
    return S


def flow_from_stochastic(S, P):
    """``f[m, n] = S[m, n] P_n``."""
    S = check_square(S, name="stochastic matrix")
    P = check_vector(P, S.shape[0], name="P")
    return S * P[np.newaxis, :]


def verify_stochastic(S, g, tol=1e-9):
    S = np.asarray(S, dtype=float)
    report = Report()
    report.add("nonnegative", -S.min(initial=0.0), tol)
    report.add("column_sums", np.abs(S.sum(axis=0) - 1.0).max(initial=0.0), tol)
    report.add("edge_support", np.abs(S[~g.adjacency_matrix()]).max(initial=0.0), tol)
    return report
