"""Pointwise differential invariants of the rotational surfaces.

All scalars depend on ``u`` only.  Functions taking ``v`` use it solely for
the frame-based (inner product) computations, which is how the
``v``-independence is tested.

Conventions: ``W`` is the meridian speed ``sqrt(|E|)`` and ``G`` the signed
second metric coefficient (positive for type I, negative for type II).
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

from .errors import DomainError, InvalidPointError
from .minkowski import minkowski_inner
from .surface import (
    SurfaceType,
    frame_from,
    is_valid_jets,
    point_jets,
    position_jets_from,
    require_valid,
)

INFLECTION_TOL = 1e-10


class SecondFormCoeffs(NamedTuple):
    c11_1: float
    c12_1: float
    c22_1: float
    c11_2: float
    c12_2: float
    c22_2: float


class MeanCurvature(NamedTuple):
    H1: float
    H2: float
    Hnorm2: float


class NormalConnection(NamedTuple):
    dxn: float
    dyn: float


class FrenetCoeffs(NamedTuple):
    gamma: float
    mu: float
    nu1: float
    nu2: float
    phi: float


class DeltaInvariants(NamedTuple):
    D1: float
    D2: float
    D3: float
    is_inflection: bool


class _Terms:
    """Recurring sub-expressions at one point."""

    __slots__ = ("p", "a", "b", "a2", "b2", "E", "G", "W", "cross", "wedge", "lin", "rad")

    def __init__(self, spec, p):
        self.p = p
        a, b = spec.alpha, spec.beta
        self.a, self.b = a, b
        self.a2, self.b2 = a * a, b * b
        if spec.stype is SurfaceType.I:
            self.E = p.fp**2 - p.gp**2
            self.G = self.a2 * p.f**2 + self.b2 * p.g**2
        else:
            self.E = p.fp**2 + p.gp**2
            self.G = self.a2 * p.f**2 - self.b2 * p.g**2
        self.W = math.sqrt(abs(self.E))
        # f''g' - f'g''
        self.cross = p.fpp * p.gp - p.fp * p.gpp
        # f g' - f' g
        self.wedge = p.f * p.gp - p.fp * p.g
        # a^2 f g' + b^2 f' g
        self.lin = self.a2 * p.f * p.gp + self.b2 * p.fp * p.g
        # a^2 f f' +/- b^2 g g'  (half the u-derivative of G)
        if spec.stype is SurfaceType.I:
            self.rad = self.a2 * p.f * p.fp + self.b2 * p.g * p.gp
        else:
            self.rad = self.a2 * p.f * p.fp - self.b2 * p.g * p.gp


def _terms(spec, u):
    return _Terms(spec, require_valid(spec, u))


# -- second fundamental form -------------------------------------------------


def second_form_coeffs(spec, u, v=0.0):
    """``c^k_ij = <z_ij, n_k>`` from the position jets and the moving frame."""
    p = require_valid(spec, u)
    return _second_form_from(spec, p, v)


def _second_form_from(spec, p, v):
    fr = frame_from(spec, p, v)
    _, _, z_uu, z_uv, z_vv = position_jets_from(spec, p, v)
    ip = minkowski_inner
    return SecondFormCoeffs(
        float(ip(z_uu, fr.n1)),
        float(ip(z_uv, fr.n1)),
        float(ip(z_vv, fr.n1)),
        float(ip(z_uu, fr.n2)),
        float(ip(z_uv, fr.n2)),
        float(ip(z_vv, fr.n2)),
    )


def second_form_closed(spec, u):
    """Closed-form ``c^k_ij``; the type II block is derived the same way as type I."""
    t = _terms(spec, u)
    sg = math.sqrt(abs(t.G))
    if spec.stype is SurfaceType.I:
        return SecondFormCoeffs(
            0.0,
            t.a * t.b * t.wedge / sg,
            0.0,
            t.cross / t.W,
            0.0,
            -t.lin / t.W,
        )
    return SecondFormCoeffs(
        t.cross / t.W,
        0.0,
        -t.lin / t.W,
        0.0,
        -t.a * t.b * t.wedge / sg,
        0.0,
    )


# -- Gauss curvature -----------------------------------------------------------


def gauss_curvature(spec, u):
    return _gauss_closed(_terms(spec, u), spec.stype)


def _gauss_closed(t, stype):
    if stype is SurfaceType.I:
        s2 = -t.E  # g'^2 - f'^2
        num = t.cross * t.lin * t.G + t.a2 * t.b2 * t.wedge**2 * s2
        return num / (s2**2 * t.G**2)
    num = t.a2 * t.b2 * t.wedge**2 * t.E - t.cross * t.G * t.lin
    return num / (t.E**2 * t.G**2)


def gauss_curvature_from_sigma(spec, u, v=0.0):
    """Gauss-equation value built from the frame inner products alone."""
    p = require_valid(spec, u)
    return _gauss_from_coeffs(spec, p, _second_form_from(spec, p, v))


def _gauss_from_coeffs(spec, p, c):
    t = _Terms(spec, p)
    aE, aG = abs(t.E), abs(t.G)
    sxx = (c.c11_1 / aE, c.c11_2 / aE)
    syy = (c.c22_1 / aG, c.c22_2 / aG)
    r = math.sqrt(aE * aG)
    sxy = (c.c12_1 / r, c.c12_2 / r)
    ex, ey = spec.stype.signs
    num = sxx[0] * syy[0] + sxx[1] * syy[1] - sxy[0] ** 2 - sxy[1] ** 2
    return num / (ex * ey)


# -- mean curvature ------------------------------------------------------------


def mean_curvature(spec, u, v=0.0):
    """``H = (1/2) tr sigma`` in normal-frame components, via the coordinate trace."""
    p = require_valid(spec, u)
    return _mean_from_coeffs(spec, p, _second_form_from(spec, p, v))


def _mean_from_coeffs(spec, p, c):
    t = _Terms(spec, p)
    E, F, G = t.E, 0.0, t.G
    det = E * G - F * F
    H1 = 0.5 * (G * c.c11_1 + E * c.c22_1 - 2 * F * c.c12_1) / det
    H2 = 0.5 * (G * c.c11_2 + E * c.c22_2 - 2 * F * c.c12_2) / det
    return MeanCurvature(H1, H2, H1 * H1 + H2 * H2)


def mean_curvature_display(spec, u):
    """Closed-form mean curvature coefficient as displayed for each family.

    Type I returns the ``n2`` coefficient; type II the ``n1`` coefficient of
    the printed formula, which carries the opposite overall sign to the
    coordinate trace.
    """
    t = _terms(spec, u)
    if spec.stype is SurfaceType.I:
        s2 = -t.E
        num = -t.cross * t.G - t.lin * s2
        return num / (2 * t.G * s2**1.5)
    num = -t.cross * t.G + t.lin * t.E
    return num / (2 * t.G * t.E**1.5)


# -- normal connection ---------------------------------------------------------


def frenet_coeffs(spec, u):
    return _frenet(_terms(spec, u), spec.stype)


def _frenet(t, stype):
    wg = t.W * t.G
    ab = t.a * t.b
    p = t.p
    nu1 = t.cross / t.W**3
    mu = ab * t.wedge / wg
    if stype is SurfaceType.I:
        return FrenetCoeffs(
            -t.rad / wg,
            mu,
            nu1,
            -t.lin / wg,
            ab * (p.g * p.gp - p.f * p.fp) / wg,
        )
    return FrenetCoeffs(
        t.rad / wg,
        mu,
        nu1,
        t.lin / wg,
        -ab * (p.g * p.gp + p.f * p.fp) / wg,
    )


def normal_connection_coeffs(spec, u):
    """``D_x n1 = dxn n2`` and ``D_y n1 = dyn n2``."""
    fc = frenet_coeffs(spec, u)
    return NormalConnection(0.0, fc.phi)


def normal_curvature(spec, u):
    return _kappa_closed(_terms(spec, u))


def _kappa_closed(t):
    # same shape for both families once E and G carry their signs
    num = t.a * t.b * t.wedge * (t.E * t.lin + t.cross * t.G)
    return num / (t.E**2 * t.G**2)


def commutator_coefficient(spec, u):
    """``lam`` with ``[x, y] = lam y`` for the unit tangent frame.

    Computed as the Lie bracket of ``z_u / W`` and ``z_v / sqrt|G|``:
    ``lam = -(a^2 f f' +/- b^2 g g') / (W G)``.  This equals ``gamma`` for
    type I and ``-gamma`` for type II.
    """
    t = _terms(spec, u)
    return -t.rad / (t.W * t.G)


def speed(spec, u):
    """``W = sqrt|E|``; ``x(h) = h'(u) / W`` for functions of ``u``."""
    return _terms(spec, u).W


def structural_rhs(spec, u):
    """Right-hand sides of the three structural equations for x(mu), x(nu2), x(gamma)."""
    g, m, n1, n2, ph = frenet_coeffs(spec, u)
    if spec.stype is SurfaceType.I:
        return (
            2 * m * g - n1 * ph,
            g * (n1 + n2) + m * ph,
            n1 * n2 - m * m + g * g,
        )
    return (
        n1 * ph - 2 * m * g,
        -g * (n1 + n2) - m * ph,
        n1 * n2 - m * m - g * g,
    )


# -- inflection test -----------------------------------------------------------


def deltas_from_coeffs(c, tol=INFLECTION_TOL):
    D1 = c.c11_1 * c.c12_2 - c.c12_1 * c.c11_2
    D2 = c.c11_1 * c.c22_2 - c.c22_1 * c.c11_2
    D3 = c.c12_1 * c.c22_2 - c.c22_1 * c.c12_2
    return DeltaInvariants(D1, D2, D3, abs(D1) <= tol and abs(D2) <= tol and abs(D3) <= tol)


def delta_invariants(spec, u, tol=INFLECTION_TOL, v=0.0):
    return deltas_from_coeffs(second_form_coeffs(spec, u, v), tol)


# -- aggregate -----------------------------------------------------------------


@dataclass(frozen=True)
class InvariantSample:
    u: float
    valid: bool
    E: float = 0.0
    F: float = 0.0
    G: float = 0.0
    K: float = 0.0
    H1: float = 0.0
    H2: float = 0.0
    Hnorm2: float = 0.0
    kappa: float = 0.0
    gamma: float = 0.0
    mu: float = 0.0
    nu1: float = 0.0
    nu2: float = 0.0
    phi: float = 0.0
    D1: float = 0.0
    D2: float = 0.0
    D3: float = 0.0

    FIELDS = (
        "E", "F", "G", "K", "H1", "H2", "Hnorm2", "kappa",
        "gamma", "mu", "nu1", "nu2", "phi", "D1", "D2", "D3",
    )

    def as_dict(self):
        return asdict(self)


def invariant_sample(spec, u, v=0.0):
    """Every invariant at ``u``; invalid or out-of-domain points give ``valid=False``."""
    u = float(u)
    try:
        p = point_jets(spec, u)
    except DomainError:
        return InvariantSample(u, False)
    if not is_valid_jets(spec, p):
        return InvariantSample(u, False)
    try:
        c = _second_form_from(spec, p, v)
    except InvalidPointError:
        return InvariantSample(u, False)
    t = _Terms(spec, p)
    H = _mean_from_coeffs(spec, p, c)
    fc = _frenet(t, spec.stype)
    d = deltas_from_coeffs(c)
    return InvariantSample(
        u=u,
        valid=True,
        E=t.E,
        F=0.0,
        G=t.G,
        K=_gauss_closed(t, spec.stype),
        H1=H.H1,
        H2=H.H2,
        Hnorm2=H.Hnorm2,
        kappa=_kappa_closed(t),
        gamma=fc.gamma,
        mu=fc.mu,
        nu1=fc.nu1,
        nu2=fc.nu2,
        phi=fc.phi,
        D1=d.D1,
        D2=d.D2,
        D3=d.D3,
    )
