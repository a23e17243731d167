"""Layered source/sink network whose unit flows are local probability flows."""

from dataclasses import dataclass

import numpy as np

from ..graph import DirectedGraph
from ..quantum import WalkOperator
from ..validation import check_probability_vector


@dataclass(frozen=True, eq=False)
class FlowNetwork:
    """Network ``source -> left_n -> right_m -> sink``.

    Node numbering: ``0`` is the source, ``1 + n`` is ``left_n``,
    ``1 + N + m`` is ``right_m`` and ``2N + 1`` is the sink.  Source and sink
    arcs are always present (possibly with zero capacity); a middle arc
    ``left_n -> right_m`` exists iff ``capacity[m, n] > 0``.
    """

    P: np.ndarray
    P_prime: np.ndarray
    capacity: np.ndarray
    graph: DirectedGraph

    @property
    def n_vertices(self):
        return self.P.shape[0]

    @property
    def n_nodes(self):
        return 2 * self.n_vertices + 2

    @property
    def source(self):
        return 0

    @property
    def sink(self):
        return 2 * self.n_vertices + 1

    def left(self, n):
        return 1 + n

    def right(self, m):
        return 1 + self.n_vertices + m

    @property
    def middle_pairs(self):
        """``(n, m)`` for each middle arc, ordered by source then target."""
        targets, sources = np.nonzero(self.capacity > 0)
        order = np.lexsort((targets, sources))
        return [(int(sources[i]), int(targets[i])) for i in order]

    @property
    def arcs(self):
        """List of ``(tail, head, capacity)``: N source arcs, then middle arcs, then N sink arcs."""
        n = self.n_vertices
        arcs = [(self.source, self.left(v), float(self.P[v])) for v in range(n)]
        arcs += [(self.left(s), self.right(t), float(self.capacity[t, s])) for s, t in self.middle_pairs]
        arcs += [(self.right(v), self.sink, float(self.P_prime[v])) for v in range(n)]
        return arcs


def unit_capacity(g):
    return g.adjacency_matrix().astype(float)


def build_flow_network(P, P_prime, g, atol=1e-9):
    """Network with ``C[m, n] = 1`` on edges ``n -> m`` and 0 elsewhere.

    Raises :class:`~qwflow.exceptions.NormalizationError` if either
    distribution is negative or does not sum to one within ``atol``.
    """
    n = g.n_vertices
    P = np.clip(check_probability_vector(P, n, atol, name="P"), 0.0, None)
    P_prime = np.clip(check_probability_vector(P_prime, n, atol, name="P_prime"), 0.0, None)
    return FlowNetwork(P, P_prime, unit_capacity(g), g)


def capacity_mode(net, mode, operator=None):
    """Same network with middle capacities from ``mode``.

    ``"unit"`` uses ``C[m, n] in {0, 1}``; ``"amplitude"`` uses ``|U[m, n]|`` on
    edges of the graph, which additionally bounds every flow entry by the
    matching amplitude.
    """
    if mode == "unit":
        return FlowNetwork(net.P, net.P_prime, unit_capacity(net.graph), net.graph)
    if mode == "amplitude":
        if not isinstance(operator, WalkOperator):
            raise ValueError("amplitude capacities need the walk operator")
        if operator.graph != net.graph:
            raise ValueError("operator graph differs from network graph")
        cap = np.where(net.graph.adjacency_matrix(), np.abs(operator.matrix), 0.0)
        return FlowNetwork(net.P, net.P_prime, cap, net.graph)
    raise ValueError(f"unknown capacity mode {mode!r}")
