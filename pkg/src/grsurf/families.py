"""Generators for the special surface classes.

Minimal and PNMC (parallel normalized mean curvature) surfaces have
closed-form meridians.  Flat, flat-normal-connection and CMC surfaces are
characterized by second-order ODEs for ``f(u)`` in the chart ``g = u``; these
are integrated with fixed-step RK4.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .errors import DomainError, SingularityError
from .invariants import _Terms, _frenet
from .meridian import ClosedFormMeridian, Interval, SampledMeridian
from .surface import SurfaceSpec, SurfaceType, is_valid_jets, require_valid


class Kind(str, Enum):
    FLAT = "flat"
    FLAT_NORMAL = "flat_normal"
    MINIMAL = "minimal"
    CMC = "cmc"
    PNMC = "pnmc"


@dataclass(frozen=True)
class SpecialClass:
    """A class of surfaces; CMC carries ``c`` and PNMC carries ``C``."""

    kind: Kind
    constant: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind in (Kind.CMC, Kind.PNMC) and self.constant == 0.0:
            raise ValueError(f"{self.kind.value} needs a non-zero constant")

    @classmethod
    def flat(cls):
        return cls(Kind.FLAT)

    @classmethod
    def flat_normal(cls):
        return cls(Kind.FLAT_NORMAL)

    @classmethod
    def minimal(cls):
        return cls(Kind.MINIMAL)

    @classmethod
    def cmc(cls, c):
        return cls(Kind.CMC, float(c))

    @classmethod
    def pnmc(cls, C):
        return cls(Kind.PNMC, float(C))


_KERNEL_CODES = {Kind.FLAT: kernels.FLAT, Kind.FLAT_NORMAL: kernels.FLAT_NORMAL, Kind.CMC: kernels.CMC}

_GUARD_FACTORS = {
    kernels.GUARD_SPEED: "1 - f'^2",
    kernels.GUARD_G: "alpha^2 f^2 +/- beta^2 u^2",
    kernels.GUARD_FLAT: "alpha^2 f + beta^2 u f'",
    kernels.INVALID: "validity",
    kernels.NONFINITE: "non-finite value",
}


@dataclass(frozen=True)
class MinimalParams:
    A: float
    C: float = 0.0
    eps: int = 1
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not self.A > 0:
            raise ValueError("A must be positive")
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if not (self.alpha > 0 and self.beta > 0):
            raise ValueError("alpha and beta must be positive")


@dataclass(frozen=True)
class IvpConfig:
    u0: float
    f0: float
    fp0: float
    u_end: float
    h: float = 1e-3

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("RK4 step h must be positive")
        if self.u_end == self.u0:
            raise ValueError("u_end must differ from u0")


def _lit(x):
    return repr(float(x))


def minimal_source(stype, p: MinimalParams):
    """Expression source of the minimal meridian ``f(u)`` (with ``g = u``)."""
    stype = SurfaceType.parse(stype)
    k = math.sqrt(p.A) / p.alpha
    e = p.eps * p.alpha / p.beta
    b, b2 = p.beta, p.beta**2
    if stype is SurfaceType.I:
        root = f"sqrt({_lit(p.A)}+{_lit(b2)}*u^2)"
    else:
        root = f"sqrt({_lit(b2)}*u^2-{_lit(p.A)})"
    return f"{_lit(k)}*sin({_lit(e)}*ln(abs({_lit(b)}*u+{root}))+{_lit(p.C)})"


def minimal_meridian(stype, p: MinimalParams, domain=None):
    """Closed-form meridian of a minimal surface.

    Type I defaults to ``[-2, 2]``.  Type II needs ``beta^2 u^2 > A`` and
    defaults to ``(sqrt(A)/beta, sqrt(A)/beta + 2]``.
    """
    stype = SurfaceType.parse(stype)
    if domain is None:
        if stype is SurfaceType.I:
            domain = Interval(-2.0, 2.0)
        else:
            u_min = math.sqrt(p.A) / p.beta
            domain = Interval(u_min, u_min + 2.0, lo_open=True)
    if stype is SurfaceType.II:
        u_min = math.sqrt(p.A) / p.beta
        if domain.lo < -u_min < domain.hi or domain.lo < u_min < domain.hi or (
            -u_min <= domain.lo and domain.hi <= u_min
        ):
            raise DomainError(f"type II minimal meridian needs |u| > sqrt(A)/beta = {u_min}")
    m = ClosedFormMeridian(minimal_source(stype, p), "u", domain)
    spec = SurfaceSpec(stype, p.alpha, p.beta, m)
    _require_some_valid(spec, domain)
    return m


def pnmc_meridian(stype, C, sign=1, alpha=1.0, beta=1.0, side=1, domain=None):
    """Closed-form meridian with parallel normalized mean curvature vector.

    Type I: ``f = sign*sqrt(u^2 + C^2)``, default domain ``[-2, 2]``.
    Type II: ``f = sign*sqrt(C^2 - u^2)`` restricted to where the surface is
    timelike, ``|C| alpha / sqrt(alpha^2 + beta^2) < |u| < |C|``; ``side``
    picks the positive or negative component.
    """
    stype = SurfaceType.parse(stype)
    if C == 0:
        raise ValueError("C must be non-zero")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    C2 = _lit(float(C) ** 2)
    pre = "" if sign == 1 else "-"
    if stype is SurfaceType.I:
        src = f"{pre}sqrt(u^2+{C2})"
        domain = domain or Interval(-2.0, 2.0)
    else:
        src = f"{pre}sqrt({C2}-u^2)"
        c_abs = abs(float(C))
        u_min = c_abs * alpha / math.hypot(alpha, beta)
        clip = Interval(u_min, c_abs, True, True) if side == 1 else Interval(-c_abs, -u_min, True, True)
        if domain is not None:
            lo, hi = max(domain.lo, clip.lo), min(domain.hi, clip.hi)
            if not lo < hi:
                raise DomainError("requested domain does not meet the valid PNMC interval")
            lo_open = clip.lo_open if lo == clip.lo else domain.lo_open
            hi_open = clip.hi_open if hi == clip.hi else domain.hi_open
            clip = Interval(lo, hi, lo_open, hi_open)
        domain = clip
    m = ClosedFormMeridian(src, "u", domain)
    _require_some_valid(SurfaceSpec(stype, alpha, beta, m), domain)
    return m


def _require_some_valid(spec, domain, n=64):
    for u in domain.grid(n):
        try:
            require_valid(spec, float(u))
            return
        except (DomainError, ValueError):
            continue
    raise DomainError("generated meridian has an empty valid domain")


def ode_rhs(sclass, stype, alpha, beta, u, f, fp):
    """``f''`` forced by the class ODE at ``(u, f, f')`` in the chart ``g = u``."""
    sclass = _as_class(sclass)
    stype = SurfaceType.parse(stype)
    if sclass.kind not in _KERNEL_CODES:
        raise ValueError(f"{sclass.kind.value} surfaces are given in closed form, not by an ODE")
    st, val = kernels.rhs(
        _KERNEL_CODES[sclass.kind], stype.value, alpha, beta, sclass.constant, u, f, fp
    )
    if st != kernels.OK:
        raise SingularityError(
            f"singular ODE at u={u!r}: {_GUARD_FACTORS[st]} vanished", _GUARD_FACTORS[st]
        )
    return val


def integrate_special(sclass, stype, alpha, beta, cfg: IvpConfig):
    """Integrate the class ODE with classical RK4 and return a sampled meridian.

    The span is covered by ``ceil(|u_end - u0| / h)`` equal steps.  Nodes
    carry ``f''`` from the ODE right side.  A guard hit truncates the output
    and sets ``truncated``; ``note`` records which guard fired.
    """
    sclass = _as_class(sclass)
    stype = SurfaceType.parse(stype)
    if sclass.kind not in _KERNEL_CODES:
        raise ValueError(f"{sclass.kind.value} surfaces are given in closed form, not by an ODE")
    if not (alpha > 0 and beta > 0):
        raise ValueError("alpha and beta must be positive")
    if stype is SurfaceType.I and not abs(cfg.fp0) < 1:
        raise ValueError("type I initial slope must satisfy |f'(u0)| < 1")
    us, fs, fps, fpps, status = kernels.rk4(
        _KERNEL_CODES[sclass.kind], stype.value, alpha, beta, sclass.constant,
        cfg.u0, cfg.f0, cfg.fp0, cfg.u_end, cfg.h,
    )
    if len(us) < 2:
        factor = _GUARD_FACTORS.get(status, "unknown")
        raise SingularityError(f"immediate singularity at u0={cfg.u0!r}: {factor}", factor)
    if cfg.u_end < cfg.u0:
        us, fs, fps, fpps = us[::-1], fs[::-1], fps[::-1], fpps[::-1]
    truncated = status != kernels.OK
    note = kernels.STATUS_NAMES[status]
    return SampledMeridian(us, fs, fps, fpps, truncated=truncated, note=note)


def _as_class(sclass):
    if isinstance(sclass, SpecialClass):
        return sclass
    return SpecialClass(Kind(sclass))


def class_residual(sclass, spec, u):
    """Left minus right side of the class's characterizing identity at ``u``.

    The identities are written for a general meridian ``(f, g)``, so any
    parametrization can be classified.  Zero iff the surface belongs to the
    class at ``u``.
    """
    sclass = _as_class(sclass)
    t = _Terms(spec, require_valid(spec, u))
    p = t.p
    typ1 = spec.stype is SurfaceType.I
    if sclass.kind is Kind.FLAT:
        return t.a2 * t.b2 * t.wedge**2 * t.E - t.cross * t.lin * t.G
    if sclass.kind is Kind.FLAT_NORMAL:
        if typ1:
            return t.cross / (-t.E) - t.lin / t.G
        return t.cross / t.E + t.lin / t.G
    if sclass.kind is Kind.MINIMAL:
        if typ1:
            return t.cross / (-t.E) + t.lin / t.G
        return t.cross / t.E - t.lin / t.G
    if sclass.kind is Kind.CMC:
        fc = _frenet(t, spec.stype)
        return fc.nu1 - fc.nu2 - sclass.constant
    if typ1:
        return p.f * p.fp - p.g * p.gp
    return p.f * p.fp + p.g * p.gp


def valid_nodes(spec, us):
    """Boolean mask of the nodes where ``spec`` is a valid immersion."""
    out = np.zeros(len(us), dtype=bool)
    for i, u in enumerate(us):
        try:
            fj, gj = spec.meridian.jets(float(u))
        except DomainError:
            continue
        from .surface import PointJets

        out[i] = is_valid_jets(spec, PointJets(float(u), *fj, *gj))
    return out
