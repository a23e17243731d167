"""JSON readers and writers for graphs, complex matrices, states and reports.

Complex data is stored as ``[re, im]`` pairs, matrices row-major:
``{"rows": N, "cols": N, "data": [[re, im], ...]}``.  Real matrices (flows,
currents, transition matrices) are plain nested lists.  A path of ``"-"``
means stdin or stdout.
"""

import json
import sys

import numpy as np

from .graph import ExpansionMap, build_graph
from .quantum import DensityState, PureState, validate_channel, validate_unitary


def read_json(path):
    if str(path) == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_json(obj, path):
    text = json.dumps(obj, indent=2)
    if path is None or str(path) == "-":
        sys.stdout.write(text + "\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def graph_from_dict(doc):
    return build_graph(int(doc["vertices"]), [tuple(e) for e in doc.get("edges", [])])


def encode_complex_matrix(m):
    m = np.asarray(m, dtype=complex)
    rows, cols = m.shape
    return {"rows": rows, "cols": cols, "data": [[float(z.real), float(z.imag)] for z in m.ravel()]}


def decode_complex_matrix(doc):
    rows, cols = int(doc["rows"]), int(doc["cols"])
    data = np.asarray(doc["data"], dtype=float).reshape(-1, 2)
    if data.shape[0] != rows * cols:
        raise ValueError(f"matrix declares {rows}x{cols} but has {data.shape[0]} entries")
    return (data[:, 0] + 1j * data[:, 1]).reshape(rows, cols)


def encode_complex_vector(v):
    return {"data": [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex)]}


def decode_complex_vector(doc):
    data = np.asarray(doc["data"], dtype=float).reshape(-1, 2)
    return data[:, 0] + 1j * data[:, 1]


def operator_from_dict(doc, g):
    """A :class:`WalkOperator` from a matrix document, or a channel from ``{"kraus": [...]}``."""
    if "kraus" in doc:
        return validate_channel([decode_complex_matrix(k) for k in doc["kraus"]], g)
    return validate_unitary(decode_complex_matrix(doc), g)


def state_from_dict(doc):
    """Pure state from ``{"data": [...]}``, density state if ``rows``/``cols`` are present."""
    if "rows" in doc:
        return DensityState(decode_complex_matrix(doc))
    return PureState(decode_complex_vector(doc))


def expansion_map_from_dict(doc):
    return ExpansionMap(tuple(int(d) for d in doc["internal_dims"]))


def real_matrix_from_json(doc, key="flow"):
    """Dense real matrix from a nested list, or from ``doc[key]`` when given a mapping."""
    if isinstance(doc, dict):
        doc = doc[key]
    m = np.asarray(doc, dtype=float)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m
