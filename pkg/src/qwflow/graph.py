"""Directed graphs with mandatory self-loops, and internal-state expansion.

Edges are ordered pairs ``(n, m)`` meaning the particle may hop from ``n`` to
``m``.  Matrices indexed by the graph follow the operator convention
``M[m, n]`` (row = target, column = source), so ``adjacency_matrix()[m, n]``
is true exactly when ``n -> m`` is an edge.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DimensionError
from .validation import check_square, check_vector


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable directed graph on vertices ``0..n_vertices-1``.

    Use :func:`build_graph` rather than the constructor; it adds the self-loops
    and removes duplicate edges.
    """

    n_vertices: int
    edges: frozenset
    successors: tuple = field(repr=False, compare=False)

    def has_edge(self, source, target):
        return (source, target) in self.edges

    def __len__(self):
        return self.n_vertices

    def adjacency_matrix(self):
        """Boolean ``(N, N)`` matrix with ``A[m, n]`` true iff ``n -> m``."""
        a = np.zeros((self.n_vertices, self.n_vertices), dtype=bool)
        for n, m in self.edges:
            a[m, n] = True
        return a

    def sorted_edges(self):
        return sorted(self.edges)

    def to_dict(self):
        return {"vertices": self.n_vertices, "edges": [list(e) for e in self.sorted_edges()]}


def build_graph(n_vertices, edges=()):
    """Build a :class:`DirectedGraph`, adding every self-loop.

    Parameters
    ----------
    n_vertices : int
        Number of vertices, at least one.
    edges : iterable of (int, int)
        Directed edges ``(source, target)``.  Self-loops may be omitted.

    Raises
    ------
    IndexError
        If an edge references a vertex outside ``0..n_vertices-1``.
    """
    n_vertices = int(n_vertices)
    if n_vertices < 1:
        raise ValueError(f"a graph needs at least one vertex, got {n_vertices}")
    edge_set = {(n, n) for n in range(n_vertices)}
    for edge in edges:
        source, target = (int(v) for v in edge)
        for v in (source, target):
            if not 0 <= v < n_vertices:
                raise IndexError(f"edge {source}->{target} references vertex {v} outside 0..{n_vertices - 1}")
        edge_set.add((source, target))
    successors = [[] for _ in range(n_vertices)]
    for source, target in sorted(edge_set):
        successors[source].append(target)
    return DirectedGraph(
        n_vertices=n_vertices,
        edges=frozenset(edge_set),
        successors=tuple(tuple(s) for s in successors),
    )


def graph_from_support(matrix, atol=1e-12):
    """Graph whose edges are the nonzero pattern of an operator (``n -> m`` iff ``|M[m, n]| > atol``)."""
    matrix = check_square(matrix, dtype=complex)
    targets, sources = np.nonzero(np.abs(matrix) > atol)
    return build_graph(matrix.shape[0], zip(sources.tolist(), targets.tolist()))


def cycle_graph(n_vertices, directed=False):
    edges = [(n, (n + 1) % n_vertices) for n in range(n_vertices)]
    if not directed:
        edges += [(m, n) for n, m in edges]
    return build_graph(n_vertices, edges)


def complete_graph(n_vertices):
    return build_graph(n_vertices, [(n, m) for n in range(n_vertices) for m in range(n_vertices)])


def strongly_connected_components(g):
    """Component label per vertex (Tarjan, iterative)."""
    index = [-1] * g.n_vertices
    low = [0] * g.n_vertices
    on_stack = [False] * g.n_vertices
    label = [-1] * g.n_vertices
    stack = []
    counter = 0
    n_components = 0

    for root in range(g.n_vertices):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            succ = g.successors[v]
            recurse = False
            while i < len(succ):
                w = succ[i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    label[w] = n_components
                    if w == v:
                        break
                n_components += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return label


def is_reversible(g):
    """True iff every edge ``n -> m`` has a directed return path ``m ~> n``."""
    label = strongly_connected_components(g)
    return all(label[n] == label[m] for n, m in g.edges)


@dataclass(frozen=True)
class ExpansionMap:
    """Row-major bijection between ``(vertex, internal state)`` pairs and flat indices.

    ``(n, k)`` maps to ``offsets[n] + k`` where ``offsets[n] = sum(internal_dims[:n])``.
    """

    internal_dims: tuple

    @property
    def base_vertex_count(self):
        return len(self.internal_dims)

    @property
    def offsets(self):
        return tuple(int(x) for x in np.concatenate([[0], np.cumsum(self.internal_dims)[:-1]]))

    @property
    def expanded_vertex_count(self):
        return int(sum(self.internal_dims))

    def index(self, n, k):
        if not 0 <= k < self.internal_dims[n]:
            raise IndexError(f"internal state {k} out of range for vertex {n}")
        return self.offsets[n] + k

    def pair(self, i):
        return self.pairs()[i]

    def pairs(self):
        return [(n, k) for n, d in enumerate(self.internal_dims) for k in range(d)]

    def labels(self):
        """Base vertex of every expanded index."""
        return np.repeat(np.arange(self.base_vertex_count), self.internal_dims)

    def membership(self):
        """``(N, N')`` 0/1 matrix summing expanded entries into their base vertex."""
        m = np.zeros((self.base_vertex_count, self.expanded_vertex_count))
        m[self.labels(), np.arange(self.expanded_vertex_count)] = 1.0
        return m

    def to_dict(self):
        return {
            "base_vertices": self.base_vertex_count,
            "internal_dims": list(self.internal_dims),
            "index": [list(p) for p in self.pairs()],
        }


def expand_internal(g, internal_dims):
    """Replace each vertex ``n`` by ``internal_dims[n]`` mutually connected vertices.

    ``(n, k) -> (m, l)`` is an edge of the result iff ``n -> m`` is an edge of ``g``.

    Returns
    -------
    expanded : DirectedGraph
    mapping : ExpansionMap
    """
    dims = tuple(int(d) for d in internal_dims)
    if len(dims) != g.n_vertices:
        raise DimensionError(f"need {g.n_vertices} internal dimensions, got {len(dims)}")
    if any(d < 1 for d in dims):
        raise ValueError(f"internal dimensions must be positive, got {list(dims)}")
    mapping = ExpansionMap(dims)
    offsets = mapping.offsets
    edges = [
        (offsets[n] + k, offsets[m] + l)
        for n, m in g.edges
        for k in range(dims[n])
        for l in range(dims[m])
    ]
    return build_graph(mapping.expanded_vertex_count, edges), mapping


def aggregate_probability(p_expanded, mapping):
    """Marginal over internal states: ``P_n = sum_k P_(n,k)``."""
    p_expanded = check_vector(p_expanded, mapping.expanded_vertex_count, name="P_expanded")
    return np.bincount(mapping.labels(), weights=p_expanded, minlength=mapping.base_vertex_count)


def aggregate_current(j_expanded, mapping):
    """Blockwise sum ``J_mn = sum_{k,l} J_(m,l),(n,k)``."""
    j_expanded = check_square(j_expanded, mapping.expanded_vertex_count, name="J_expanded")
    m = mapping.membership()
    return m @ j_expanded @ m.T
