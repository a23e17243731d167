import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from instances import enumerate_vertices, instances, lp_max_flow_value, random_instance
from qwflow import (
    InfeasibleFlowError,
    NormalizationError,
    PureState,
    build_flow_network,
    build_graph,
    capacity_mode,
    extract_flow_matrix,
    max_flow,
    probabilities,
    solve_flow_lp,
    step_pure,
    validate_unitary,
    verify_flow,
)
from qwflow.flow import edmonds_karp, flow_constraints, simplex
from qwflow.graph import complete_graph

HAD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
SWAP = np.array([[0, 1], [1, 0]], dtype=complex)


def assert_conservation(net, flows, atol=1e-12):
    balance = np.zeros(net.n_nodes)
    for (tail, head, cap), x in zip(net.arcs, flows):
        assert -atol <= x <= cap + atol
        balance[tail] -= x
        balance[head] += x
    assert np.abs(balance[1:-1]).max() <= atol


# --- network construction -------------------------------------------------

def test_single_vertex_network():
    net = build_flow_network([1.0], [1.0], build_graph(1))
    assert net.n_nodes == 4
    assert net.arcs == [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]


def test_two_vertex_complete_network():
    net = build_flow_network([1, 0], [0.5, 0.5], complete_graph(2))
    arcs = net.arcs
    assert [a[2] for a in arcs[:2]] == [1.0, 0.0]
    assert [a[2] for a in arcs[2:6]] == [1.0] * 4
    assert [a[2] for a in arcs[6:]] == [0.5, 0.5]


def test_capacity_rule_on_one_way_edge():
    net = build_flow_network([0.5, 0.5], [0.5, 0.5], build_graph(2, [(0, 1)]))
    c = net.capacity
    assert (c[0, 0], c[1, 0], c[0, 1], c[1, 1]) == (1, 1, 0, 1)


def test_network_rejects_unnormalized():
    with pytest.raises(NormalizationError):
        build_flow_network([0.5, 0.4], [0.5, 0.5], complete_graph(2))


# --- max flow ---------------------------------------------------------------

def test_edmonds_karp_textbook_network():
    arcs = [(0, 1, 16), (0, 2, 13), (1, 2, 10), (2, 1, 4), (1, 3, 12), (3, 2, 9),
            (2, 4, 14), (4, 3, 7), (3, 5, 20), (4, 5, 4)]
    assert edmonds_karp(6, arcs, 0, 5).value == pytest.approx(23)


def test_single_vertex_max_flow():
    net = build_flow_network([1.0], [1.0], build_graph(1))
    value, flows = max_flow(net)
    assert value == 1.0
    np.testing.assert_array_equal(flows, [1, 1, 1])


def test_swap_max_flow_routes_zero_to_one():
    net = build_flow_network([1, 0], [0, 1], complete_graph(2))
    result = max_flow(net)
    assert result.value == pytest.approx(1.0, abs=1e-12)
    f = extract_flow_matrix(net, result.arc_flows)
    np.testing.assert_allclose(f, [[0, 0], [1, 0]], atol=1e-12)


def test_hadamard_extraction_is_unique_solution():
    net = build_flow_network([1, 0], [0.5, 0.5], complete_graph(2))
    f = extract_flow_matrix(net, max_flow(net).arc_flows)
    np.testing.assert_allclose(f, [[0.5, 0], [0.5, 0]], atol=1e-12)


def test_identity_walk_extraction_is_valid():
    P = np.array([0.2, 0.3, 0.5])
    g = build_graph(3)
    net = build_flow_network(P, P, g)
    f = extract_flow_matrix(net, max_flow(net).arc_flows)
    np.testing.assert_allclose(f, np.diag(P), atol=1e-12)
    assert verify_flow(f, P, P, g).passed


def test_extract_raises_when_value_short():
    net = build_flow_network([1, 0], [0, 1], build_graph(2))
    result = max_flow(net)
    assert result.value == 0.0
    with pytest.raises(InfeasibleFlowError):
        extract_flow_matrix(net, result.arc_flows)


def test_random_five_vertex_instance_value_matches_lp_oracle():
    rng = np.random.default_rng(5)
    g, op, psi, P, P_prime = random_instance(5, rng, sparse=False)
    net = build_flow_network(P, P_prime, g)
    result = max_flow(net)
    assert result.value == pytest.approx(1.0, abs=1e-9)
    assert result.value == pytest.approx(lp_max_flow_value(net), abs=1e-9)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2 ** 32 - 1))
def test_max_flow_conserves_and_matches_lp_oracle(n, seed):
    rng = np.random.default_rng(seed)
    # arbitrary (not walk-generated) distributions so values below one occur too
    g = build_graph(n, [tuple(rng.integers(0, n, 2)) for _ in range(n)])
    P, P_prime = rng.dirichlet(np.ones(n) * 0.5), rng.dirichlet(np.ones(n) * 0.5)
    net = build_flow_network(P, P_prime, g)
    result = max_flow(net)
    assert_conservation(net, result.arc_flows)
    assert result.value == pytest.approx(lp_max_flow_value(net), abs=1e-9)


# --- capacity modes -------------------------------------------------------------

def test_amplitude_mode_identity_forces_diagonal():
    P = np.array([0.25, 0.75])
    g = complete_graph(2)
    net = capacity_mode(build_flow_network(P, P, g), "amplitude", validate_unitary(np.eye(2), g))
    assert net.middle_pairs == [(0, 0), (1, 1)]
    np.testing.assert_allclose(extract_flow_matrix(net, max_flow(net).arc_flows), np.diag(P))


def test_amplitude_mode_swap_is_antidiagonal():
    P = np.array([0.25, 0.75])
    g = complete_graph(2)
    net = capacity_mode(build_flow_network(P, P[::-1], g), "amplitude", validate_unitary(SWAP, g))
    assert net.middle_pairs == [(0, 1), (1, 0)]
    f = extract_flow_matrix(net, max_flow(net).arc_flows)
    assert f[1, 0] == pytest.approx(0.25) and f[0, 1] == pytest.approx(0.75)


def test_amplitude_mode_hadamard_still_unit_flow():
    g = complete_graph(2)
    op = validate_unitary(HAD, g)
    psi = PureState([1, 0])
    net = build_flow_network(probabilities(psi), probabilities(step_pure(op, psi)), g)
    amp = capacity_mode(net, "amplitude", op)
    np.testing.assert_allclose(amp.capacity, np.full((2, 2), 1 / np.sqrt(2)))
    assert max_flow(amp).value == pytest.approx(1.0, abs=1e-9)


def test_amplitude_mode_needs_operator():
    net = build_flow_network([1, 0], [1, 0], complete_graph(2))
    with pytest.raises(ValueError):
        capacity_mode(net, "amplitude")
    with pytest.raises(ValueError):
        capacity_mode(net, "bogus")
    assert np.array_equal(capacity_mode(net, "unit").capacity, net.capacity)


def test_unit_value_dominates_amplitude_value():
    for g, op, psi, P, P_prime in instances(40, seed=11, sizes=range(2, 7)):
        net = build_flow_network(P, P_prime, g)
        unit = max_flow(net).value
        amp = max_flow(capacity_mode(net, "amplitude", op)).value
        assert unit >= amp - 1e-12
        assert unit == pytest.approx(1.0, abs=1e-9) and amp == pytest.approx(1.0, abs=1e-9)


# --- simplex and the flow LP -------------------------------------------------

def test_simplex_small_textbook_problem():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
    A = np.array([[1, 0, 1, 0, 0], [0, 2, 0, 1, 0], [3, 2, 0, 0, 1]], dtype=float)
    res = simplex([-3, -5, 0, 0, 0], A, [4, 12, 18])
    assert res.status == "optimal"
    np.testing.assert_allclose(res.x[:2], [2, 6])
    assert res.fun == pytest.approx(-36)


def test_simplex_detects_infeasible_and_unbounded():
    assert simplex([1, 1], [[1, 1]], [-1]).status == "infeasible"
    assert simplex([-1, 0], [[1, -1]], [1]).status == "unbounded"


def test_simplex_handles_redundant_rows():
    A = np.array([[1, 1, 0], [1, 1, 0], [0, 1, 1]], dtype=float)
    res = simplex([1, 2, 3], A, [1, 1, 1])
    assert res.status == "optimal"
    np.testing.assert_allclose(A @ res.x, [1, 1, 1])
    assert res.fun == pytest.approx(2)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6), st.integers(0, 2 ** 32 - 1))
def test_simplex_matches_highs_on_transport_problems(m, n, seed):
    rng = np.random.default_rng(seed)
    supply, demand = rng.dirichlet(np.ones(m)), rng.dirichlet(np.ones(n))
    cost = rng.normal(size=(m, n))
    A = np.zeros((m + n, m * n))
    for i in range(m):
        A[i, i * n:(i + 1) * n] = 1
    for j in range(n):
        A[m + j, j::n] = 1
    b = np.concatenate([supply, demand])
    ours = simplex(cost.ravel(), A, b)
    ref = linprog(cost.ravel(), A_eq=A, b_eq=b, method="highs")
    assert ours.status == "optimal"
    assert ours.fun == pytest.approx(ref.fun, abs=1e-9)
    assert np.abs(A @ ours.x - b).max() <= 1e-12


def test_lp_identity_walk_kills_circulation():
    f = solve_flow_lp([0.5, 0.5], [0.5, 0.5], complete_graph(2), "max_stationary")
    np.testing.assert_allclose(f, np.diag([0.5, 0.5]), atol=1e-12)


def test_lp_directed_cycle_shift():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    shift = np.eye(3)[[2, 0, 1]]  # |n> -> |n+1>
    op = validate_unitary(shift, g)
    psi = PureState(np.array([1, 1, 0]) / np.sqrt(2))
    P, P_prime = probabilities(psi), probabilities(step_pure(op, psi))
    np.testing.assert_allclose(P_prime, [0, 0.5, 0.5])
    for objective in ("max_stationary", "none"):
        f = solve_flow_lp(P, P_prime, g, objective)
        expected = np.zeros((3, 3))
        expected[1, 0] = expected[2, 1] = 0.5
        np.testing.assert_allclose(f, expected, atol=1e-12)


def test_lp_infeasible():
    with pytest.raises(InfeasibleFlowError):
        solve_flow_lp([1, 0], [0, 1], build_graph(2))
    with pytest.raises(ValueError):
        solve_flow_lp([1, 0], [1, 0], build_graph(2), objective="min_cost")


def stationary_optimum_by_enumeration(P, P_prime, g):
    A, b, edges = flow_constraints(P, P_prime, g)
    c = np.array([1.0 if s == t else 0.0 for s, t in edges])
    return max(c @ x for x in enumerate_vertices(A, b))


@pytest.mark.parametrize("seed", range(6))
def test_lp_objective_matches_vertex_enumeration_six_vertices(seed):
    rng = np.random.default_rng(100 + seed)
    while True:
        # keep the basis enumeration to a few thousand candidates
        g, op, psi, P, P_prime = random_instance(6, rng, sparse=True)
        if len(g.edges) <= 16:
            break
    f = solve_flow_lp(P, P_prime, g)
    assert verify_flow(f, P, P_prime, g).passed
    assert np.trace(f) == pytest.approx(stationary_optimum_by_enumeration(P, P_prime, g), abs=1e-9)


@pytest.mark.parametrize("seed", range(3))
def test_lp_objective_matches_vertex_enumeration_dense_four_vertices(seed):
    rng = np.random.default_rng(200 + seed)
    g, op, psi, P, P_prime = random_instance(4, rng, sparse=False)
    f = solve_flow_lp(P, P_prime, g)
    assert np.trace(f) == pytest.approx(stationary_optimum_by_enumeration(P, P_prime, g), abs=1e-9)


def test_lp_objective_matches_highs_on_many_instances():
    for g, op, psi, P, P_prime in instances(100, seed=21):
        A, b, edges = flow_constraints(P, P_prime, g)
        c = -np.array([1.0 if s == t else 0.0 for s, t in edges])
        ref = linprog(c, A_eq=A, b_eq=b, method="highs")
        f = solve_flow_lp(P, P_prime, g)
        assert np.trace(f) == pytest.approx(-ref.fun, abs=1e-9)


# --- verification -----------------------------------------------------------------

def test_verify_identity_case_all_zero():
    P = np.array([0.3, 0.7])
    report = verify_flow(np.diag(P), P, P, build_graph(2))
    assert report.passed
    assert all(c.max_violation == 0 for c in report.checks)
    assert [c.condition for c in report.checks] == ["Flow1", "Flow2", "Flow3", "Flow4"]


def test_verify_negative_entry():
    f = np.array([[0.6, 0.0], [-0.1, 0.5]])
    report = verify_flow(f, [0.5, 0.5], [0.6, 0.4], complete_graph(2))
    assert not report["Flow1"].passed
    assert report["Flow1"].max_violation == pytest.approx(0.1)


def test_verify_row_sums_against_supplied_final():
    f = np.array([[0.5, 0.0], [0.25, 0.25]])
    g = complete_graph(2)
    assert verify_flow(f, [0.75, 0.25], [0.5, 0.5], g).passed
    bad = verify_flow(f, [0.75, 0.25], [0.6, 0.4], g)
    assert bad.failed() == ["Flow4"]
    assert bad["Flow4"].max_violation == pytest.approx(0.1)


def test_verify_off_edge_flow():
    f = np.array([[0.0, 1.0], [0.0, 0.0]])
    report = verify_flow(f, [0, 1], [1, 0], build_graph(2, [(0, 1)]))
    assert report.failed() == ["Flow2"]


def test_report_records_format():
    records = verify_flow(np.eye(1), [1], [1], build_graph(1)).to_records()
    assert records[0] == {"condition": "Flow1", "pass": True, "max_violation": 0.0}
