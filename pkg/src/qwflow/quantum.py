"""States, graph-local walk operators and channels, and one-step evolution."""

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, LocalityError, NormalizationError, UnitarityError
from .graph import DirectedGraph, cycle_graph, expand_internal
from .validation import check_square, check_vector

UNITARY_ATOL = 1e-9
LOCALITY_ATOL = 1e-12


@dataclass(frozen=True, eq=False)
class PureState:
    amplitudes: np.ndarray

    def __post_init__(self):
        a = check_vector(self.amplitudes, dtype=complex, name="amplitudes")
        norm = np.vdot(a, a).real
        if abs(norm - 1.0) > UNITARY_ATOL:
            raise NormalizationError(f"state has squared norm {norm:.12g}, not 1")
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def basis(cls, n_vertices, n):
        a = np.zeros(n_vertices, dtype=complex)
        a[n] = 1.0
        return cls(a)

    @property
    def dim(self):
        return self.amplitudes.shape[0]

    def to_density(self):
        return DensityState(np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DensityState:
    matrix: np.ndarray

    def __post_init__(self):
        rho = check_square(self.matrix, dtype=complex, name="density matrix")
        herm = np.abs(rho - rho.conj().T).max(initial=0.0)
        if herm > UNITARY_ATOL:
            raise ValueError(f"density matrix is not Hermitian (defect {herm:.3e})")
        tr = np.trace(rho).real
        if abs(tr - 1.0) > UNITARY_ATOL:
            raise NormalizationError(f"density matrix has trace {tr:.12g}, not 1")
        lowest = np.linalg.eigvalsh((rho + rho.conj().T) / 2).min()
        if lowest < -UNITARY_ATOL:
            raise ValueError(f"density matrix has negative eigenvalue {lowest:.3e}")
        object.__setattr__(self, "matrix", rho)

    @property
    def dim(self):
        return self.matrix.shape[0]


def _locality_violation(matrix, g, atol):
    """First ``(source, target, |entry|)`` with a nonzero entry off the edge set, else None."""
    bad = (np.abs(matrix) > atol) & ~g.adjacency_matrix()
    if not bad.any():
        return None
    targets, sources = np.nonzero(bad)
    order = np.lexsort((targets, sources))[0]
    n, m = int(sources[order]), int(targets[order])
    return n, m, abs(matrix[m, n])


@dataclass(frozen=True, eq=False)
class WalkOperator:
    """A unitary whose entry ``U[m, n]`` vanishes unless ``n -> m`` is an edge."""

    matrix: np.ndarray
    graph: DirectedGraph

    def __post_init__(self):
        u = check_square(self.matrix, self.graph.n_vertices, dtype=complex, name="U")
        violation = _locality_violation(u, self.graph, LOCALITY_ATOL)
        if violation is not None:
            raise LocalityError(*violation)
        defect = np.abs(u.conj().T @ u - np.eye(u.shape[0])).max()
        if defect > UNITARY_ATOL:
            raise UnitarityError(defect)
        object.__setattr__(self, "matrix", u)


@dataclass(frozen=True, eq=False)
class QuantumChannel:
    """Kraus operators ``K_i`` with ``sum K_i^H K_i = I``, each graph-local."""

    kraus_ops: tuple
    graph: DirectedGraph

    def __post_init__(self):
        n = self.graph.n_vertices
        ops = tuple(check_square(k, n, dtype=complex, name="Kraus operator") for k in self.kraus_ops)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        for k in ops:
            violation = _locality_violation(k, self.graph, LOCALITY_ATOL)
            if violation is not None:
                raise LocalityError(*violation)
        completeness = sum(k.conj().T @ k for k in ops)
        defect = np.abs(completeness - np.eye(n)).max()
        if defect > UNITARY_ATOL:
            raise UnitarityError(defect, f"Kraus operators are not complete: max |sum K^H K - I| = {defect:.3e}")
        object.__setattr__(self, "kraus_ops", ops)


def validate_unitary(matrix, g):
    """Check ``matrix`` against ``g`` and wrap it as a :class:`WalkOperator`.

    Raises :class:`LocalityError` naming the first offending pair (ordered by
    source, then target) or :class:`UnitarityError` carrying the max defect.
    """
    return WalkOperator(np.asarray(matrix, dtype=complex), g)


def validate_channel(kraus_ops, g):
    return QuantumChannel(tuple(np.asarray(k, dtype=complex) for k in kraus_ops), g)


def step_pure(op, psi):
    if psi.dim != op.matrix.shape[0]:
        raise DimensionError(f"state has dimension {psi.dim}, operator {op.matrix.shape[0]}")
    return PureState(op.matrix @ psi.amplitudes)


def step_channel(channel, rho):
    n = channel.graph.n_vertices
    if rho.dim != n:
        raise DimensionError(f"state has dimension {rho.dim}, channel {n}")
    out = sum(k @ rho.matrix @ k.conj().T for k in channel.kraus_ops)
    return DensityState((out + out.conj().T) / 2)


def step(op, state):
    """Advance ``state`` one step under a walk operator or a channel."""
    if isinstance(op, QuantumChannel):
        if isinstance(state, PureState):
            state = state.to_density()
        return step_channel(op, state)
    if isinstance(state, DensityState):
        return step_channel(QuantumChannel((op.matrix,), op.graph), state)
    return step_pure(op, state)


def probabilities(state):
    """Vertex occupation probabilities of a pure or mixed state."""
    if isinstance(state, PureState):
        return np.abs(state.amplitudes) ** 2
    return np.clip(np.diag(state.matrix).real, 0.0, None)


def hadamard_coin():
    return np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def coined_line_walk(positions, coin, shift_rule="cyclic"):
    """Coined walk ``S (I (x) C)`` on a cycle of ``positions`` sites, as a plain walk.

    Expanded index of ``(x, c)`` is ``2 x + c``.  The shift sends coin state 0
    one site left and coin state 1 one site right, modulo ``positions``.

    Returns
    -------
    op : WalkOperator
        On the expanded graph of the undirected ``positions``-cycle.
    mapping : ExpansionMap
    """
    if shift_rule != "cyclic":
        raise ValueError(f"unsupported shift rule {shift_rule!r}; only 'cyclic' is implemented")
    if positions < 2:
        raise ValueError(f"need at least 2 positions, got {positions}")
    coin = check_square(coin, 2, dtype=complex, name="coin")
    defect = np.abs(coin.conj().T @ coin - np.eye(2)).max()
    if defect > UNITARY_ATOL:
        raise UnitarityError(defect)

    dim = 2 * positions
    shift = np.zeros((dim, dim))
    for x in range(positions):
        shift[2 * ((x - 1) % positions), 2 * x] = 1.0
        shift[2 * ((x + 1) % positions) + 1, 2 * x + 1] = 1.0
    u = shift @ np.kron(np.eye(positions), coin)

    expanded, mapping = expand_internal(cycle_graph(positions), [2] * positions)
    return WalkOperator(u, expanded), mapping


def dephasing_channel(op, strength, phases):
    """Apply ``op`` then, with probability ``strength``, the diagonal phase unitary ``diag(phases)``."""
    d = np.diag(np.asarray(phases, dtype=complex))
    u = op.matrix
    return validate_channel([np.sqrt(1 - strength) * u, np.sqrt(strength) * d @ u], op.graph)


def mixture_channel(ops, weights):
    """Random-unitary channel choosing ``ops[i]`` with probability ``weights[i]``.

    All operators must share one graph.
    """
    weights = np.asarray(weights, dtype=float)
    if abs(weights.sum() - 1.0) > UNITARY_ATOL or weights.min() < 0:
        raise NormalizationError("mixture weights must be a probability vector")
    g = ops[0].graph
    if any(o.graph != g for o in ops):
        raise ValueError("all operators in a mixture must share one graph")
    return validate_channel([np.sqrt(w) * o.matrix for w, o in zip(weights, ops)], g)
