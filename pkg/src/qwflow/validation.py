"""Input validation helpers shared by the estimators and the functional API."""

import numpy as np

from .exceptions import DimensionError, NormalizationError

NORM_ATOL = 1e-9


def check_probability_vector(p, n=None, atol=NORM_ATOL, name="P"):
    """Return ``p`` as a 1-d float array, checking length, sign and total mass."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {p.shape}")
    if n is not None and p.shape[0] != n:
        raise DimensionError(f"{name} has length {p.shape[0]}, expected {n}")
    if not np.all(np.isfinite(p)):
        raise NormalizationError(f"{name} has non-finite entries")
    if p.size and p.min() < -atol:
        raise NormalizationError(f"{name} has a negative entry {p.min():.3e}")
    total = p.sum()
    if abs(total - 1.0) > atol:
        raise NormalizationError(f"{name} sums to {total:.12g}, not 1")
    return p


def check_square(a, n=None, dtype=float, name="matrix"):
    a = np.asarray(a, dtype=dtype)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {a.shape}")
    if n is not None and a.shape[0] != n:
        raise DimensionError(f"{name} is {a.shape[0]}x{a.shape[0]}, expected {n}x{n}")
    return a


def check_vector(v, n=None, dtype=float, name="vector"):
    v = np.asarray(v, dtype=dtype)
    if v.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {v.shape}")
    if n is not None and v.shape[0] != n:
        raise DimensionError(f"{name} has length {v.shape[0]}, expected {n}")
    return v
