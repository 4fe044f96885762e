"""Vector algebra in Minkowski 4-space with signature (+, +, +, -).

Vectors are plain numpy arrays whose last axis has length 4; the fourth
coordinate is the timelike one.  All functions broadcast over leading axes.
"""
from enum import Enum

import numpy as np

METRIC = np.array([1.0, 1.0, 1.0, -1.0])

LIGHTLIKE_TOL = 1e-12


class CausalCharacter(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def vec4(x1, x2, x3, x4):
    """Build a Vec4, rejecting non-finite coordinates."""
    v = np.array([x1, x2, x3, x4], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite Vec4 coordinates: {v}")
    return v


def minkowski_inner(a, b):
    """Return a1*b1 + a2*b2 + a3*b3 - a4*b4."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.sum(a * METRIC * b, axis=-1)


def minkowski_norm2(v):
    return minkowski_inner(v, v)


def causal_character(v, tol=LIGHTLIKE_TOL):
    if tol < 0:
        raise ValueError("tol must be non-negative")
    q = float(minkowski_norm2(v))
    if abs(q) <= tol:
        return CausalCharacter.LIGHTLIKE
    return CausalCharacter.SPACELIKE if q > 0 else CausalCharacter.TIMELIKE


def gram_matrix(vs):
    """Matrix of pairwise Minkowski inner products of ``vs``."""
    m = np.asarray(vs, dtype=float)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] != 4:
        raise ValueError("gram_matrix expects a non-empty list of Vec4")
    return (m * METRIC) @ m.T


def normalize(v):
    """Scale a non-lightlike vector to unit Minkowski length (+1 or -1)."""
    q = float(minkowski_norm2(v))
    if q == 0.0:
        raise ValueError("cannot normalize a lightlike vector")
    return np.asarray(v, dtype=float) / np.sqrt(abs(q))
