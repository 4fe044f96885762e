"""The two timelike general rotational surface families.

Type I (timelike meridian)::

    z(u, v) = (f cos av, f sin av, g sinh bv, g cosh bv)

Type II (spacelike meridian)::

    z(u, v) = (f cos av, f sin av, g cosh bv, g sinh bv)

with rotation rates ``a = alpha > 0`` and ``b = beta > 0``.  Every quantity
here is built from the meridian jets at ``u``; the ``v`` argument only
rotates the frame.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import FrameError, InvalidPointError
from .meridian import Meridian
from .minkowski import gram_matrix

VALID_EPS = 1e-12
FRAME_CHECK_TOL = 1e-8


class SurfaceType(Enum):
    I = 1
    II = 2

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        key = str(s).strip().upper()
        if key in ("I", "1"):
            return cls.I
        if key in ("II", "2"):
            return cls.II
        raise ValueError(f"surface type must be I or II, got {s!r}")

    @property
    def signs(self):
        """``(<x,x>, <y,y>)`` of the unit tangent frame."""
        return (-1.0, 1.0) if self is SurfaceType.I else (1.0, -1.0)


@dataclass(frozen=True)
class SurfaceSpec:
    stype: SurfaceType
    alpha: float
    beta: float
    meridian: Meridian

    def __post_init__(self):
        object.__setattr__(self, "stype", SurfaceType.parse(self.stype))
        if not (self.alpha > 0 and self.beta > 0):
            raise ValueError("rotation rates alpha and beta must be positive")


@dataclass(frozen=True)
class FirstForm:
    E: float
    F: float
    G: float


@dataclass(frozen=True)
class Frame:
    x: np.ndarray
    y: np.ndarray
    n1: np.ndarray
    n2: np.ndarray

    def as_array(self):
        return np.stack([self.x, self.y, self.n1, self.n2])


@dataclass(frozen=True)
class PointJets:
    """Meridian data at one ``u``: values and derivatives of f and g."""

    u: float
    f: float
    fp: float
    fpp: float
    g: float
    gp: float
    gpp: float


def point_jets(spec, u):
    fj, gj = spec.meridian.jets(float(u))
    return PointJets(float(u), fj.val, fj.d1, fj.d2, gj.val, gj.d1, gj.d2)


def _factors(spec, p):
    """``(speed2, rot2)``: the positive quantities under the frame square roots."""
    a2, b2 = spec.alpha**2, spec.beta**2
    if spec.stype is SurfaceType.I:
        return p.gp**2 - p.fp**2, a2 * p.f**2 + b2 * p.g**2
    return p.fp**2 + p.gp**2, b2 * p.g**2 - a2 * p.f**2


def is_valid_jets(spec, p):
    speed2, rot2 = _factors(spec, p)
    return speed2 > VALID_EPS and rot2 > VALID_EPS


def validity(spec, u):
    """Both strict inequalities of the surface type hold at ``u`` (guard band 1e-12).

    Raises :class:`~grsurf.errors.DomainError` for ``u`` outside the meridian domain.
    """
    return is_valid_jets(spec, point_jets(spec, u))


def require_valid(spec, u):
    p = point_jets(spec, u)
    if not is_valid_jets(spec, p):
        raise InvalidPointError(f"surface is not a valid timelike immersion at u={u!r}")
    return p


def position(spec, u, v):
    f, g = spec.meridian.values(float(u))
    a, b = spec.alpha, spec.beta
    ca, sa = math.cos(a * v), math.sin(a * v)
    ch, sh = math.cosh(b * v), math.sinh(b * v)
    if spec.stype is SurfaceType.I:
        return np.array([f * ca, f * sa, g * sh, g * ch])
    return np.array([f * ca, f * sa, g * ch, g * sh])


def first_form(spec, u):
    p = require_valid(spec, u)
    a2, b2 = spec.alpha**2, spec.beta**2
    if spec.stype is SurfaceType.I:
        return FirstForm(p.fp**2 - p.gp**2, 0.0, a2 * p.f**2 + b2 * p.g**2)
    return FirstForm(p.fp**2 + p.gp**2, 0.0, a2 * p.f**2 - b2 * p.g**2)


def position_jets_from(spec, p, v):
    """``(z_u, z_v, z_uu, z_uv, z_vv)`` at ``(p.u, v)``."""
    a, b = spec.alpha, spec.beta
    ca, sa = math.cos(a * v), math.sin(a * v)
    ch, sh = math.cosh(b * v), math.sinh(b * v)
    if spec.stype is SurfaceType.I:
        # third/fourth slots carry (sinh, cosh)
        h3, h4 = sh, ch
        dh3, dh4 = ch, sh
    else:
        h3, h4 = ch, sh
        dh3, dh4 = sh, ch
    z_u = np.array([p.fp * ca, p.fp * sa, p.gp * h3, p.gp * h4])
    z_v = np.array([-a * p.f * sa, a * p.f * ca, b * p.g * dh3, b * p.g * dh4])
    z_uu = np.array([p.fpp * ca, p.fpp * sa, p.gpp * h3, p.gpp * h4])
    z_uv = np.array([-a * p.fp * sa, a * p.fp * ca, b * p.gp * dh3, b * p.gp * dh4])
    z_vv = np.array([-a * a * p.f * ca, -a * a * p.f * sa, b * b * p.g * h3, b * b * p.g * h4])
    return z_u, z_v, z_uu, z_uv, z_vv


def position_jets(spec, u, v):
    return position_jets_from(spec, point_jets(spec, u), v)


def frame_from(spec, p, v, check=True):
    speed2, rot2 = _factors(spec, p)
    if not (speed2 > VALID_EPS and rot2 > VALID_EPS):
        raise InvalidPointError(f"surface is not a valid timelike immersion at u={p.u!r}")
    ws, wr = math.sqrt(speed2), math.sqrt(rot2)
    a, b = spec.alpha, spec.beta
    ca, sa = math.cos(a * v), math.sin(a * v)
    ch, sh = math.cosh(b * v), math.sinh(b * v)
    z_u, z_v, *_ = position_jets_from(spec, p, v)
    x = z_u / ws
    y = z_v / wr
    if spec.stype is SurfaceType.I:
        n1 = np.array([b * p.g * sa, -b * p.g * ca, a * p.f * ch, a * p.f * sh]) / wr
        n2 = np.array([p.gp * ca, p.gp * sa, p.fp * sh, p.fp * ch]) / ws
    else:
        n1 = np.array([p.gp * ca, p.gp * sa, -p.fp * ch, -p.fp * sh]) / ws
        n2 = np.array([-b * p.g * sa, b * p.g * ca, a * p.f * sh, a * p.f * ch]) / wr
    fr = Frame(x, y, n1, n2)
    if check:
        err = frame_gram_error(spec, fr)
        if err > FRAME_CHECK_TOL:
            raise FrameError(f"frame Gram matrix off by {err:.3e} at u={p.u!r}, v={v!r}")
    return fr


def frame(spec, u, v=0.0):
    """Orthonormal moving frame ``{x, y, n1, n2}`` at ``(u, v)``."""
    return frame_from(spec, point_jets(spec, u), v)


def expected_gram(stype):
    ex, ey = SurfaceType.parse(stype).signs
    return np.diag([ex, ey, 1.0, 1.0])


def frame_gram_error(spec, fr):
    return float(np.max(np.abs(gram_matrix(fr.as_array()) - expected_gram(spec.stype))))
