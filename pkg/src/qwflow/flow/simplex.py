"""Dense two-phase primal simplex for ``min c.x  s.t.  A x = b, x >= 0``.

Bland's rule picks both the entering column (lowest index with negative
reduced cost) and the leaving row (lowest basic index among ratio ties), so
the method cannot cycle on degenerate problems, which flow polytopes are.
"""

from typing import NamedTuple

import numpy as np

PIVOT_TOL = 1e-10
FEASIBILITY_TOL = 1e-9


class LPResult(NamedTuple):
    status: str
    x: np.ndarray
    fun: float
    iterations: int


def _pivot(tableau, basis, row, col):
    tableau[row] /= tableau[row, col]
    for r in range(tableau.shape[0]):
        if r != row and tableau[r, col] != 0.0:
            tableau[r] -= tableau[r, col] * tableau[row]
    basis[row] = col


def _run(tableau, basis, n_cols, tol, max_iter):
    """Pivot until optimal over the first ``n_cols`` columns; the last row holds reduced costs."""
    iterations = 0
    m = tableau.shape[0] - 1
    while iterations < max_iter:
        costs = tableau[-1, :n_cols]
        candidates = np.nonzero(costs < -tol)[0]
        if candidates.size == 0:
            return "optimal", iterations
        col = int(candidates[0])
        column = tableau[:m, col]
        rows = np.nonzero(column > tol)[0]
        if rows.size == 0:
            return "unbounded", iterations
        ratios = tableau[rows, -1] / column[rows]
        best = ratios.min()
        tied = rows[ratios <= best + tol * max(1.0, abs(best))]
        row = int(min(tied, key=lambda r: basis[r]))
        _pivot(tableau, basis, row, col)
        iterations += 1
    raise RuntimeError(f"simplex did not converge in {max_iter} pivots")


def simplex(c, A, b, tol=PIVOT_TOL, feasibility_tol=FEASIBILITY_TOL, max_iter=10_000):
    """Minimize ``c @ x`` subject to ``A @ x == b`` and ``x >= 0``.

    Redundant equality rows are detected in phase I and dropped.  The basic
    solution is re-solved from the original data at the end so that rounding
    accumulated in the tableau does not leak into ``x``.

    Returns
    -------
    LPResult
        ``status`` is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``.
    """
    c = np.asarray(c, dtype=float)
    A = np.array(A, dtype=float)
    b = np.array(b, dtype=float)
    m, n = A.shape
    flip = b < 0
    A[flip] *= -1
    b[flip] *= -1

    # phase I: artificials n..n+m-1 start basic
    tableau = np.zeros((m + 1, n + m + 1))
    tableau[:m, :n] = A
    tableau[:m, n:n + m] = np.eye(m)
    tableau[:m, -1] = b
    tableau[-1, :n] = -A.sum(axis=0)
    tableau[-1, -1] = -b.sum()
    basis = list(range(n, n + m))
    status, it1 = _run(tableau, basis, n + m, tol, max_iter)
    if -tableau[-1, -1] > feasibility_tol:
        return LPResult("infeasible", np.full(n, np.nan), np.nan, it1)

    keep, redundant = [], []
    for row in range(m):
        if basis[row] < n:
            keep.append(row)
            continue
        candidates = np.nonzero(np.abs(tableau[row, :n]) > tol)[0]
        if candidates.size:
            _pivot(tableau, basis, row, int(candidates[0]))
            keep.append(row)
        else:
            # the original row owning this artificial is a combination of the others
            redundant.append(basis[row] - n)
    tableau = np.vstack([tableau[keep][:, list(range(n)) + [-1]], np.zeros(n + 1)])
    basis = [basis[r] for r in keep]
    independent = [r for r in range(m) if r not in redundant]
    A_kept, b_kept = A[independent], b[independent]

    # phase II
    tableau[-1, :n] = c
    for row, j in enumerate(basis):
        tableau[-1] -= c[j] * tableau[row]
    status, it2 = _run(tableau, basis, n, tol, max_iter)
    if status != "optimal":
        return LPResult(status, np.full(n, np.nan), np.nan, it1 + it2)

    x = np.zeros(n)
    if basis:
        x[basis] = np.linalg.solve(A_kept[:, basis], b_kept)
    x[(x < 0) & (x >= -feasibility_tol)] = 0.0
    return LPResult("optimal", x, float(c @ x), it1 + it2)
