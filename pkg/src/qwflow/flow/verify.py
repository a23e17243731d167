"""Checks of the four flow conditions."""

import numpy as np

from ..report import Report


def verify_flow(f, P, P_prime, g, tol=1e-9):
    """Check nonnegativity, edge support, column sums and row sums of ``f``.

    Returns a :class:`~qwflow.report.Report` with entries ``Flow1``..``Flow4``
    carrying the worst violation of each condition.
    """
    f = np.asarray(f, dtype=float)
    P = np.asarray(P, dtype=float)
    P_prime = np.asarray(P_prime, dtype=float)
    report = Report()
    report.add("Flow1", -f.min(initial=0.0), tol)
    off_edge = np.abs(f[~g.adjacency_matrix()])
    report.add("Flow2", off_edge.max(initial=0.0), tol)
    report.add("Flow3", np.abs(f.sum(axis=0) - P).max(initial=0.0), tol)
    report.add("Flow4", np.abs(f.sum(axis=1) - P_prime).max(initial=0.0), tol)
    return report
