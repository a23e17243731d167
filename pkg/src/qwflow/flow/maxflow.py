"""Shortest-augmenting-path (Edmonds-Karp) max-flow on real capacities."""

from collections import deque
from typing import NamedTuple

import numpy as np

from ..exceptions import InfeasibleFlowError

RESIDUAL_EPS = 1e-12
VALUE_ATOL = 1e-9


class MaxFlowResult(NamedTuple):
    value: float
    arc_flows: np.ndarray


def edmonds_karp(n_nodes, arcs, source, sink, eps=RESIDUAL_EPS):
    """Maximum ``source``-``sink`` flow.

    Parameters
    ----------
    n_nodes : int
    arcs : sequence of (tail, head, capacity)
    eps : float
        Residual capacities at or below ``eps`` count as saturated.  BFS
        augmentation keeps the number of rounds at O(V E) whatever the
        capacity values, so real-valued capacities terminate.

    Returns
    -------
    MaxFlowResult
        Flow value and per-arc flows aligned with ``arcs``.
    """
    n_arcs = len(arcs)
    tails = np.array([a[0] for a in arcs], dtype=int)
    heads = np.array([a[1] for a in arcs], dtype=int)
    caps = np.array([a[2] for a in arcs], dtype=float)
    flow = [0.0] * n_arcs

    # residual edge 2i runs along arc i, 2i+1 against it
    adjacency = [[] for _ in range(n_nodes)]
    for i in range(n_arcs):
        adjacency[tails[i]].append(2 * i)
        adjacency[heads[i]].append(2 * i + 1)
    cap_list = caps.tolist()
    tail_list = tails.tolist()
    head_list = heads.tolist()

    def residual(e):
        i = e >> 1
        return cap_list[i] - flow[i] if e & 1 == 0 else flow[i]

    def endpoint(e):
        i = e >> 1
        return head_list[i] if e & 1 == 0 else tail_list[i]

    while True:
        parent_edge = [-1] * n_nodes
        seen = [False] * n_nodes
        seen[source] = True
        queue = deque([source])
        while queue and not seen[sink]:
            u = queue.popleft()
            for e in adjacency[u]:
                v = endpoint(e)
                if not seen[v] and residual(e) > eps:
                    seen[v] = True
                    parent_edge[v] = e
                    queue.append(v)
        if not seen[sink]:
            break

        path = []
        v = sink
        while v != source:
            e = parent_edge[v]
            path.append(e)
            v = tail_list[e >> 1] if e & 1 == 0 else head_list[e >> 1]
        delta = min(residual(e) for e in path)
        for e in path:
            i = e >> 1
            if e & 1 == 0:
                flow[i] = min(flow[i] + delta, cap_list[i])
            else:
                flow[i] = max(flow[i] - delta, 0.0)

    flows = np.array(flow)
    out_of_source = flows[tails == source].sum() - flows[heads == source].sum()
    return MaxFlowResult(float(out_of_source), flows)


def max_flow(net, eps=RESIDUAL_EPS):
    """Maximum flow through a :class:`~qwflow.flow.network.FlowNetwork`.

    Never raises on small values; compare ``value`` against 1 to judge
    whether a local flow exists.
    """
    return edmonds_karp(net.n_nodes, net.arcs, net.source, net.sink, eps)


def extract_flow_matrix(net, arc_flows, atol=VALUE_ATOL):
    """Flow matrix ``f[m, n]`` read off the middle arcs ``left_n -> right_m``.

    Raises
    ------
    InfeasibleFlowError
        If the flow leaving the source is below ``1 - atol``.
    """
    n = net.n_vertices
    arc_flows = np.asarray(arc_flows, dtype=float)
    value = float(arc_flows[:n].sum())
    if value < 1.0 - atol:
        raise InfeasibleFlowError(value)
    f = np.zeros((n, n))
    for k, (s, t) in enumerate(net.middle_pairs):
        f[t, s] = arc_flows[n + k]
    f[(f < 0) & (f >= -RESIDUAL_EPS)] = 0.0
    return f
