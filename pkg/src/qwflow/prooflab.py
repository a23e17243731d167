"""Exhaustive checks of the min-cut argument on small networks.

A cut of the layered network is described by the vertices ``A`` whose source
arc survives and the vertices ``B`` whose sink arc survives; every middle arc
from ``A`` to ``B`` must then be cut.  Cutting a middle arc instead of one of
its endpoint arcs is never cheaper when capacities are at most one, so these
cuts include a minimum one.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .exceptions import InvalidCutError, SizeLimitError
from .flow import max_flow

MAX_CUT_VERTICES = 12
MAX_PROJECTOR_VERTICES = 8


@dataclass(frozen=True)
class CutSpec:
    A: frozenset
    B: frozenset

    @classmethod
    def from_masks(cls, a_mask, b_mask, n):
        return cls(
            frozenset(i for i in range(n) if a_mask >> i & 1),
            frozenset(i for i in range(n) if b_mask >> i & 1),
        )

    def to_dict(self):
        return {"A": sorted(self.A), "B": sorted(self.B)}


def cut_value(spec, net):
    n = net.n_vertices
    a = np.zeros(n, dtype=bool)
    b = np.zeros(n, dtype=bool)
    a[list(spec.A)] = True
    b[list(spec.B)] = True
    return float(net.P[~a].sum() + net.P_prime[~b].sum() + net.capacity[np.ix_(b, a)].sum())


def _subset_masks(n):
    return ((np.arange(2 ** n)[:, None] >> np.arange(n)) & 1).astype(float)


def cut_value_table(net, a_chunk=None):
    """All ``2^N x 2^N`` cut values, rows indexed by the bitmask of ``A``, columns by ``B``."""
    masks = _subset_masks(net.n_vertices)
    rows = masks if a_chunk is None else masks[a_chunk]
    source_part = (1.0 - rows) @ net.P
    sink_part = (1.0 - masks) @ net.P_prime
    crossing = rows @ net.capacity.T @ masks.T
    return source_part[:, None] + sink_part[None, :] + crossing


def inequality_slack(net):
    """``1 + sum_{A,B} C - sum_A P - sum_B P'`` for every ``(A, B)`` pair."""
    masks = _subset_masks(net.n_vertices)
    return 1.0 + masks @ net.capacity.T @ masks.T - (masks @ net.P)[:, None] - (masks @ net.P_prime)[None, :]


def min_cut_brute(net, max_vertices=MAX_CUT_VERTICES):
    """Cheapest cut over all ``(A, B)`` pairs by exhaustive enumeration.

    Returns
    -------
    value : float
    spec : CutSpec
        The first minimizer in ``(A, B)`` bitmask order.
    """
    n = net.n_vertices
    if n > max_vertices:
        raise SizeLimitError(f"min-cut enumeration is capped at {max_vertices} vertices, got {n}")
    best, best_spec = np.inf, None
    chunk = max(1, 2 ** 20 // 2 ** n)
    for start in range(0, 2 ** n, chunk):
        table = cut_value_table(net, slice(start, start + chunk))
        a, b = np.unravel_index(np.argmin(table), table.shape)
        if table[a, b] < best:
            best = float(table[a, b])
            best_spec = CutSpec.from_masks(start + int(a), int(b), n)
    return best, best_spec


def crosses(spec, g):
    """True if some edge ``n -> m`` has ``n`` in ``A`` and ``m`` in ``B``."""
    return any(g.has_edge(n, m) for n in spec.A for m in spec.B)


def cut_projectors(U, spec):
    """``Pi_A = sum_{n in A} |n><n|`` and ``Pi_B = sum_{m in B} U^H |m><m| U``."""
    u = U.matrix
    n = u.shape[0]
    pi_a = np.zeros((n, n), dtype=complex)
    for v in spec.A:
        pi_a[v, v] = 1.0
    rows = u[sorted(spec.B)]
    pi_b = rows.conj().T @ rows
    return pi_a, pi_b


def projector_bound(psi, U, spec, atol=1e-9):
    """Expectation of ``Pi_A + Pi_B`` and whether the sum is a projector.

    Only defined for cuts with no edge from ``A`` into ``B``.

    Returns
    -------
    lhs : float
        ``<psi| Pi_A + Pi_B |psi>``, equal to ``sum_A P_n + sum_B P'_m``.
    is_projector : bool
        Hermitian and idempotent within ``atol``.
    """
    if crosses(spec, U.graph):
        raise InvalidCutError("the cut has an edge from A into B; the projector argument needs none")
    pi_a, pi_b = cut_projectors(U, spec)
    total = pi_a + pi_b
    a = psi.amplitudes
    lhs = float(np.vdot(a, total @ a).real)
    defect = max(
        np.abs(total @ total - total).max(initial=0.0),
        np.abs(total - total.conj().T).max(initial=0.0),
    )
    return lhs, bool(defect <= atol)


def non_crossing_cuts(g, max_vertices=MAX_PROJECTOR_VERTICES):
    """Every ``(A, B)`` with no edge from ``A`` into ``B``."""
    n = g.n_vertices
    if n > max_vertices:
        raise SizeLimitError(f"projector sweep is capped at {max_vertices} vertices, got {n}")
    for a_mask, b_mask in product(range(2 ** n), repeat=2):
        spec = CutSpec.from_masks(a_mask, b_mask, n)
        if not crosses(spec, g):
            yield spec


def min_cut_report(net, max_vertices=MAX_CUT_VERTICES, tol=1e-9):
    """Min cut alongside the max-flow value, as emitted by the CLI."""
    value, spec = min_cut_brute(net, max_vertices)
    flow_value = max_flow(net).value
    return {
        "min_cut": value,
        "argmin_A": sorted(spec.A),
        "argmin_B": sorted(spec.B),
        "maxflow_crosscheck": {
            "max_flow": flow_value,
            "difference": abs(flow_value - value),
            "pass": abs(flow_value - value) <= tol,
        },
    }
