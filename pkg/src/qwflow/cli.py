"""Command-line interface.

Exit status: 0 success, 1 a verification failed (or no local flow exists),
2 bad input or usage.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import io
from .certify import certify_step, simulate
from .current import current_from_flow, verify_current
from .exceptions import InfeasibleFlowError
from .flow import build_flow_network, verify_flow
from .graph import expand_internal
from .prooflab import (
    MAX_CUT_VERTICES,
    MAX_PROJECTOR_VERTICES,
    inequality_slack,
    min_cut_report,
    non_crossing_cuts,
    projector_bound,
)
from .quantum import PureState, QuantumChannel, WalkOperator, probabilities, step

log = logging.getLogger("qwflow")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _objective(value):
    return value.replace("-", "_")


def _add_common(p, operator=True, state=True):
    p.add_argument("--graph", required=True, help="graph JSON ('-' for stdin)")
    if operator:
        p.add_argument("--operator", help="unitary or Kraus-family JSON")
    if state:
        p.add_argument("--state", help="pure state or density matrix JSON")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default="-", help="output JSON ('-' for stdout)")


def _add_solver(p):
    p.add_argument("--solver", choices=["maxflow", "lp"], default="maxflow")
    p.add_argument("--capacity", choices=["unit", "amplitude"], default="unit")
    p.add_argument("--objective", choices=["max-stationary", "none"], default="max-stationary")


def build_parser():
    parser = argparse.ArgumentParser(prog="qwflow", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a flow matrix and its current")
    _add_common(p)
    p.add_argument("--flow", required=True, help="flow matrix JSON (nested list or {'flow': ...})")
    p.add_argument("--initial", help="initial distribution JSON list (instead of --state/--operator)")
    p.add_argument("--final", help="final distribution JSON list")

    p = sub.add_parser("flow", help="solve and verify one step")
    _add_common(p)
    _add_solver(p)

    p = sub.add_parser("simulate", help="evolve and certify several steps")
    _add_common(p)
    _add_solver(p)
    p.add_argument("--steps", type=int, default=1)

    p = sub.add_parser("expand", help="expand vertices into internal states")
    _add_common(p, operator=False, state=False)
    p.add_argument("--dims", required=True, help="comma-separated internal dimensions, one per vertex")
    p.add_argument("--map-out", help="index-map JSON (default: next to --out)")

    p = sub.add_parser("prooflab", help="exhaustive min-cut and projector checks")
    _add_common(p)
    p.add_argument("--initial", help="initial distribution JSON list (instead of --state/--operator)")
    p.add_argument("--final", help="final distribution JSON list")
    p.add_argument("--max-vertices", type=int, default=MAX_CUT_VERTICES)
    p.add_argument("--projector-max-vertices", type=int, default=MAX_PROJECTOR_VERTICES)
    return parser


def _load(args):
    if not args.operator or not args.state:
        raise InputError("--operator and --state are required")
    g = io.graph_from_dict(io.read_json(args.graph))
    op = io.operator_from_dict(io.read_json(args.operator), g)
    state = io.state_from_dict(io.read_json(args.state))
    return g, op, state


def _distributions(args, g):
    """``(P, P', op, state)`` from --initial/--final or from one step of --operator on --state."""
    if args.initial or args.final:
        if not (args.initial and args.final):
            raise InputError("--initial and --final must be given together")
        P = np.asarray(io.read_json(args.initial), dtype=float)
        P_prime = np.asarray(io.read_json(args.final), dtype=float)
        if P.shape != (g.n_vertices,) or P_prime.shape != (g.n_vertices,):
            raise InputError(f"distributions must have length {g.n_vertices}")
        return P, P_prime, None, None
    if not args.operator or not args.state:
        raise InputError("give either --initial/--final or --operator/--state")
    op = io.operator_from_dict(io.read_json(args.operator), g)
    state = io.state_from_dict(io.read_json(args.state))
    return probabilities(state), probabilities(step(op, state)), op, state


def cmd_verify(args):
    g = io.graph_from_dict(io.read_json(args.graph))
    P, P_prime, _, _ = _distributions(args, g)
    f = io.real_matrix_from_json(io.read_json(args.flow))
    if f.shape != (g.n_vertices, g.n_vertices):
        raise InputError(f"flow must be {g.n_vertices}x{g.n_vertices}, got {f.shape}")
    flow_report = verify_flow(f, P, P_prime, g, args.tol)
    current_report = verify_current(current_from_flow(f), P, P_prime, g, args.tol)
    ok = flow_report.passed and current_report.passed
    io.write_json(
        {
            "flow_checks": flow_report.to_records(),
            "current_checks": current_report.to_records(),
            "failed": flow_report.failed() + current_report.failed(),
            "pass": ok,
        },
        args.out,
    )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_flow(args):
    g, op, state = _load(args)
    P, P_prime = probabilities(state), probabilities(step(op, state))
    try:
        cert = certify_step(P, P_prime, g, args.solver, args.capacity, _objective(args.objective), op, args.tol)
    except InfeasibleFlowError as exc:
        io.write_json({"pass": False, "error": str(exc)}, args.out)
        return EXIT_FAIL
    io.write_json(cert.to_dict(), args.out)
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_simulate(args):
    if args.steps < 1:
        raise InputError("--steps must be at least 1")
    if args.tol <= 0:
        raise InputError("--tol must be positive")
    g, op, state = _load(args)
    if args.capacity == "amplitude" and isinstance(op, QuantumChannel):
        raise InputError("amplitude capacities need a unitary operator")
    records, failed_step, error = [], None, None
    runs = simulate(op, state, args.steps, args.solver, args.capacity, _objective(args.objective), args.tol)
    for t in range(1, args.steps + 1):
        try:
            _, cert = next(runs)
        except InfeasibleFlowError as exc:
            failed_step, error = t, str(exc)
            break
        records.append({"step": t, **cert.to_dict()})
        log.info("step %d: %s", t, "pass" if cert.passed else "FAIL")
        if not cert.passed:
            failed_step = t
            break
    doc = {"steps": records, "pass": failed_step is None, "failed_step": failed_step}
    if error:
        doc["error"] = error
    io.write_json(doc, args.out)
    return EXIT_OK if failed_step is None else EXIT_FAIL


def cmd_expand(args):
    g = io.graph_from_dict(io.read_json(args.graph))
    try:
        dims = [int(d) for d in args.dims.split(",") if d.strip()]
    except ValueError as exc:
        raise InputError(f"bad --dims: {exc}") from None
    if len(dims) != g.n_vertices:
        raise InputError(f"--dims has {len(dims)} entries, graph has {g.n_vertices} vertices")
    expanded, mapping = expand_internal(g, dims)
    io.write_json(expanded.to_dict(), args.out)
    map_out = args.map_out
    if map_out is None and args.out != "-":
        out = Path(args.out)
        map_out = out.with_name(out.stem + ".map.json")
    if map_out is not None:
        io.write_json(mapping.to_dict(), map_out)
    return EXIT_OK


def cmd_prooflab(args):
    g = io.graph_from_dict(io.read_json(args.graph))
    P, P_prime, op, state = _distributions(args, g)
    net = build_flow_network(P, P_prime, g)
    doc = min_cut_report(net, args.max_vertices, args.tol)
    doc["inequality_min_slack"] = float(inequality_slack(net).min())
    ok = doc["min_cut"] >= 1 - args.tol and doc["maxflow_crosscheck"]["pass"]
    if isinstance(op, WalkOperator) and isinstance(state, PureState) and g.n_vertices <= args.projector_max_vertices:
        worst_lhs, all_projectors, count = -np.inf, True, 0
        for spec in non_crossing_cuts(g, args.projector_max_vertices):
            lhs, is_proj = projector_bound(state, op, spec, args.tol)
            worst_lhs = max(worst_lhs, lhs)
            all_projectors &= is_proj
            count += 1
        doc["projector_sweep"] = {"cuts": count, "max_lhs": worst_lhs, "all_projectors": all_projectors}
        ok = ok and all_projectors and worst_lhs <= 1 + args.tol
    doc["pass"] = bool(ok)
    io.write_json(doc, args.out)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "verify": cmd_verify,
    "flow": cmd_flow,
    "simulate": cmd_simulate,
    "expand": cmd_expand,
    "prooflab": cmd_prooflab,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (InputError, OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, IndexError) as exc:
        print(f"qwflow {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
