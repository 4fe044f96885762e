"""Theorem-by-theorem verification suites.

Each suite returns a list of :class:`CheckReport`.  A report passes iff its
``max_abs_residual`` is at most its ``tolerance``.  Checks that must stay
*away* from zero (negative controls, the PNMC converse) report the shortfall
``max(0, bound - |value|)`` against tolerance 0, so the same rule applies.

Everything is deterministic: random points come from a generator seeded with
``SuiteParams.seed`` (default ``0x5EED``), which every report's notes carry.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import invariants as inv
from .families import (
    IvpConfig,
    MinimalParams,
    SpecialClass,
    class_residual,
    integrate_special,
    minimal_meridian,
    pnmc_meridian,
)
from .meridian import Interval, closed_form, fd_oracle
from .surface import SurfaceSpec, SurfaceType, frame, frame_gram_error, point_jets, validity

DEFAULT_SEED = 0x5EED

TOL_IDENTITY = 1e-10
TOL_ZERO = 1e-12
TOL_CLOSED = 1e-8
TOL_ODE = 1e-6
TOL_OFFGRID_CLASS = 1e-5
TOL_FD = 1e-6

SUITES = (
    "frames", "oracles", "flat", "flat_normal", "minimal", "cmc", "pnmc",
    "structural", "conservation",
)


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    n_points: int
    max_abs_residual: float
    tolerance: float
    passed: bool
    notes: str = ""

    @classmethod
    def make(cls, name, residuals, tolerance, notes=""):
        res = np.abs(np.asarray(residuals, dtype=float).ravel())
        n = int(res.size)
        worst = float(np.max(res)) if n else math.inf
        if n and not np.all(np.isfinite(res)):
            worst = math.inf
        return cls(name, n, worst, float(tolerance), bool(worst <= tolerance), notes)

    @classmethod
    def away_from_zero(cls, name, values, bound, notes=""):
        """Passes iff every ``|value| >= bound``; reports the worst shortfall."""
        vals = np.abs(np.asarray(values, dtype=float).ravel())
        short = np.maximum(0.0, bound - vals)
        note = f"min |value| = {float(np.min(vals)):.6g} (bound {bound:g})"
        return cls.make(name, short, 0.0, f"{note}; {notes}" if notes else note)


@dataclass(frozen=True)
class SuiteParams:
    seed: int = DEFAULT_SEED
    n_random: int = 100
    n_samples: int = 500
    h: float = 1e-3
    fd_steps: tuple = (1e-2, 5e-3, 2.5e-3)


@dataclass(frozen=True)
class FixedMeridian:
    name: str
    spec: SurfaceSpec
    interval: Interval


def _tm(stype, alpha, beta, f, g, lo, hi, lo_open=False, hi_open=False):
    iv = Interval(lo, hi, lo_open, hi_open)
    return FixedMeridian(
        f"{stype}: f={f}, g={g}", SurfaceSpec(stype, alpha, beta, closed_form(f, g, iv)), iv
    )


def fixed_meridians(stype):
    """The six fixed meridians per type, each with a declared valid interval."""
    stype = SurfaceType.parse(stype)
    if stype is SurfaceType.I:
        a, b = 1.2, 0.7
        return [
            _tm("I", a, b, "1", "u", -2, 2),
            _tm("I", a, b, "2+0.3*sin(u)", "u", -2, 2),
            _tm("I", a, b, "0.5*u^2+1", "u", -0.9, 0.9),
            _tm("I", a, b, "sqrt(u^2+1)", "u", -2, 2),
            _tm("I", a, b, "0.2*cos(2*u)+1", "sinh(u)", -1.5, 1.5),
            _tm("I", a, b, "exp(0.3*u)", "2*u", -2, 2),
        ]
    a, b = 1.0, 2.0
    return [
        _tm("II", a, b, "1", "u", 0.6, 3),
        _tm("II", a, b, "0.5+0.2*sin(u)", "u+1", 0, 2),
        _tm("II", a, b, "sqrt(1-u^2)", "u", 0.46, 0.99),
        _tm("II", a, b, "u^2", "u+2", 0, 1),
        _tm("II", a, b, "cos(u)", "cosh(u)+u", -1.2, 1.2),
        _tm("II", a, b, "exp(0.2*u)", "3+u", -1, 2),
    ]


# Meridians without special structure, used for the structural equations.
def structural_meridians(stype):
    ms = fixed_meridians(stype)
    return [ms[1], ms[4]] if SurfaceType.parse(stype) is SurfaceType.I else [ms[1], ms[5]]


def random_points(params, stype, v_span=1.0):
    """``n_random`` seeded ``(meridian, u, v)`` triples, all valid.

    ``v`` stays in ``[-v_span, v_span]``: the hyperbolic rotation grows like
    ``cosh(beta v)``, and large ``v`` would only measure cancellation error.
    """
    rng = np.random.default_rng(params.seed)
    ms = fixed_meridians(stype)
    pts = []
    while len(pts) < params.n_random:
        tm = ms[int(rng.integers(len(ms)))]
        u = float(rng.uniform(tm.interval.lo, tm.interval.hi))
        v = float(rng.uniform(-v_span, v_span))
        if u in tm.interval and validity(tm.spec, u):
            pts.append((tm, u, v))
    return pts


def _seed_note(params):
    return f"seed=0x{params.seed:X}"


# -- frames ----------------------------------------------------------------------


def suite_frames(params):
    out = []
    for st in (SurfaceType.I, SurfaceType.II):
        pts = random_points(params, st)
        gram = [frame_gram_error(tm.spec, frame(tm.spec, u, v)) for tm, u, v in pts]
        out.append(CheckReport.make(
            f"frame_gram_{st.name}", gram, TOL_IDENTITY,
            f"{_seed_note(params)}; Gram(frame) vs diag{tuple(st.signs) + (1.0, 1.0)}",
        ))
        zeros, match = [], []
        for tm, u, v in pts:
            c = inv.second_form_coeffs(tm.spec, u, v)
            k = inv.second_form_closed(tm.spec, u)
            if st is SurfaceType.I:
                zeros += [c.c11_1, c.c22_1, c.c12_2]
                match += [c.c12_1 - k.c12_1, c.c11_2 - k.c11_2, c.c22_2 - k.c22_2]
            else:
                zeros += [c.c12_1, c.c11_2, c.c22_2]
                match += [c.c11_1 - k.c11_1, c.c22_1 - k.c22_1, c.c12_2 - k.c12_2]
        out.append(CheckReport.make(
            f"second_form_zeros_{st.name}", zeros, TOL_ZERO, _seed_note(params)))
        out.append(CheckReport.make(
            f"second_form_closed_{st.name}", match, TOL_IDENTITY, _seed_note(params)))
    return out


# -- oracles ---------------------------------------------------------------------


def _spot_specs():
    s1 = SurfaceSpec("I", 1.0, 1.0, closed_form("1", "u"))
    s2 = SurfaceSpec("II", 1.0, 2.0, closed_form("1", "u", Interval(0.5, math.inf, True)))
    return s1, s2


def suite_oracles(params):
    out = []
    s1, s2 = _spot_specs()
    spots = [
        inv.gauss_curvature(s1, 0.0) - 1.0,
        inv.gauss_curvature_from_sigma(s1, 0.0) - 1.0,
        inv.gauss_curvature(s2, 1.0) - 4.0 / 9.0,
        inv.gauss_curvature_from_sigma(s2, 1.0) - 4.0 / 9.0,
    ]
    out.append(CheckReport.make(
        "gauss_spot_values", spots, TOL_IDENTITY, "K=1 (I, f=1, g=u, a=b=1, u=0); K=4/9 (II, a=1, b=2, u=1)"))
    for st in (SurfaceType.I, SurfaceType.II):
        pts = random_points(params, st)
        dk, dh, dv, dkap = [], [], [], []
        for tm, u, v in pts:
            s = tm.spec
            dk.append(inv.gauss_curvature(s, u) - inv.gauss_curvature_from_sigma(s, u, v))
            H = inv.mean_curvature(s, u, v)
            disp = inv.mean_curvature_display(s, u)
            if st is SurfaceType.I:
                dh.append(H.H2 - disp)
                dh.append(H.H1)
            else:
                dh.append(abs(H.H1) - abs(disp))
                dh.append(H.H2)
            H0 = inv.mean_curvature(s, u, 0.0)
            dv += [H.H1 - H0.H1, H.H2 - H0.H2,
                   inv.gauss_curvature_from_sigma(s, u, v) - inv.gauss_curvature_from_sigma(s, u, 0.0)]
            fc = inv.frenet_coeffs(s, u)
            dkap.append(inv.normal_curvature(s, u) - fc.mu * (fc.nu1 + fc.nu2))
        out.append(CheckReport.make(
            f"gauss_closed_vs_sigma_{st.name}", dk, 1e-9, _seed_note(params)))
        out.append(CheckReport.make(
            f"mean_trace_vs_display_{st.name}", dh, TOL_IDENTITY,
            _seed_note(params) + ("" if st is SurfaceType.I else "; type II compared in absolute value")))
        out.append(CheckReport.make(
            f"v_independence_{st.name}", dv, TOL_IDENTITY, _seed_note(params)))
        out.append(CheckReport.make(
            f"kappa_vs_frenet_{st.name}", dkap, TOL_IDENTITY, "kappa = mu (nu1 + nu2)"))
        out.append(_kappa_from_connection(st))
    conv = fd_convergence("ad_fd:sqrt(u^2+1)", list(params.fd_steps))
    out.append(CheckReport.make(
        "ad_vs_fd_order", [conv.order - 2.0], 0.2,
        f"hs={list(conv.hs)}; residuals={[float(f'{r:.3e}') for r in conv.residuals]}; order={conv.order:.4f}"))
    return out


def _kappa_from_connection(st, h=1e-4):
    """``kappa = lam phi - x(phi)`` with the true bracket ``[x, y] = lam y``; x(phi) by FD."""
    res = []
    for tm in structural_meridians(st):
        s = tm.spec
        for u in tm.interval.shrink(0.1).grid(20):
            lam = inv.commutator_coefficient(s, u)
            phi = inv.frenet_coeffs(s, u).phi
            dphi = (inv.frenet_coeffs(s, u + h).phi - inv.frenet_coeffs(s, u - h).phi) / (2 * h)
            res.append(inv.normal_curvature(s, u) - (lam * phi - dphi / inv.speed(s, u)))
    return CheckReport.make(
        f"kappa_from_connection_{st.name}", res, TOL_FD, f"central FD for x(phi), h={h:g}")


# -- finite-difference convergence ---------------------------------------------------


@dataclass(frozen=True)
class FdConvergence:
    check: str
    hs: tuple
    residuals: tuple
    order: float | None
    note: str = ""

    def pairs(self):
        return list(zip(self.hs, self.residuals))

    def ratios(self):
        r = self.residuals
        return [r[i] / r[i + 1] for i in range(len(r) - 1)]


def roundoff_floor(h):
    """Cancellation error level of a second difference with step ``h``."""
    return 100 * np.finfo(float).eps / (h * h)

_STRUCTURAL = {"x_mu": 0, "x_nu2": 1, "x_gamma": 2}


def fd_convergence(check, hs, spec=None, points=None):
    """Residual of an FD-based check at each step in ``hs`` plus the fitted order.

    ``check`` is ``"ad_fd:<expr>"`` (AD first/second derivative of ``f`` against
    central differences) or one of ``x_mu``, ``x_nu2``, ``x_gamma`` (structural
    equations, with ``spec`` and ``points`` given).  If every residual sits at
    the roundoff floor the order fit is skipped (``order`` is None).
    """
    hs = [float(h) for h in hs]
    if len(hs) < 3:
        raise ValueError("need at least 3 step sizes")
    if any(not h > 0 for h in hs) or any(hs[i] <= hs[i + 1] for i in range(len(hs) - 1)):
        raise ValueError("step sizes must be positive and strictly decreasing")
    if check.startswith("ad_fd:"):
        m = closed_form(check[len("ad_fd:"):], "u", Interval(-1.0, 1.0))
        us = points if points is not None else np.linspace(-0.8, 0.8, 9)
        res = [_ad_fd_residual(m, us, h) for h in hs]
    elif check in _STRUCTURAL:
        if spec is None or points is None:
            raise ValueError("structural checks need spec and points")
        k = _STRUCTURAL[check]
        res = [max(abs(_structural_residuals(spec, u, h)[k]) for u in points) for h in hs]
    else:
        raise ValueError(f"unknown convergence check {check!r}")
    if all(r <= roundoff_floor(h) for r, h in zip(res, hs)):
        return FdConvergence(check, tuple(hs), tuple(res), None, "residuals at roundoff floor; order fit skipped")
    slope = np.polyfit(np.log(hs), np.log(res), 1)[0]
    return FdConvergence(check, tuple(hs), tuple(res), float(slope))


def _ad_fd_residual(m, us, h):
    worst = 0.0
    for u in us:
        fj, _ = m.jets(float(u))
        fd, _ = fd_oracle(m, float(u), h)
        worst = max(worst, abs(fj.d1 - fd.d1), abs(fj.d2 - fd.d2))
    return worst


def _structural_residuals(spec, u, h):
    lo, hi = inv.frenet_coeffs(spec, u - h), inv.frenet_coeffs(spec, u + h)
    w = inv.speed(spec, u)
    x_mu = (hi.mu - lo.mu) / (2 * h) / w
    x_nu2 = (hi.nu2 - lo.nu2) / (2 * h) / w
    x_gamma = (hi.gamma - lo.gamma) / (2 * h) / w
    r = inv.structural_rhs(spec, u)
    return (x_mu - r[0], x_nu2 - r[1], x_gamma - r[2])


def suite_structural(params):
    out = []
    for st in (SurfaceType.I, SurfaceType.II):
        for j, tm in enumerate(structural_meridians(st)):
            pts = tm.interval.shrink(0.1).grid(15)
            for name in _STRUCTURAL:
                conv = fd_convergence(name, params.fd_steps, tm.spec, pts)
                ratios = conv.ratios()
                out.append(CheckReport.make(
                    f"structural_{name}_{st.name}_{j}_ratio",
                    [r - 4.0 for r in ratios], 0.5,
                    f"{tm.name}; hs={list(conv.hs)}; ratios={[round(r, 4) for r in ratios]}"))
                out.append(CheckReport.make(
                    f"structural_{name}_{st.name}_{j}_order",
                    [conv.order - 2.0 if conv.order is not None else math.inf], 0.2,
                    f"{tm.name}; order={conv.order}"))
    return out


# -- minimal and conservation ----------------------------------------------------------


MINIMAL_PARAMS = (
    MinimalParams(1.0, math.pi / 4, 1, 1.0, 1.0),
    MinimalParams(1.5, 0.3, 1, 1.3, 0.7),
    MinimalParams(0.5, -0.4, -1, 0.8, 1.5),
    MinimalParams(2.0, 1.1, 1, 2.0, 0.5),
)


def minimal_specs():
    out = []
    for st in (SurfaceType.I, SurfaceType.II):
        for p in MINIMAL_PARAMS:
            m = minimal_meridian(st, p)
            out.append((st, p, SurfaceSpec(st, p.alpha, p.beta, m)))
    return out


def _valid_grid(spec, n):
    return [u for u in spec.meridian.domain.grid(n) if validity(spec, u)]


def suite_minimal(params):
    out = []
    for st, p, s in minimal_specs():
        us = _valid_grid(s, params.n_samples)
        tag = f"{st.name}(A={p.A}, C={p.C:.6g}, eps={p.eps}, a={p.alpha}, b={p.beta})"
        Hc, cr = [], []
        for u in us:
            H = inv.mean_curvature(s, u)
            Hc += [H.H1, H.H2]
            cr.append(class_residual(SpecialClass.minimal(), s, u))
        out.append(CheckReport.make(f"minimal_H_{tag}", Hc, TOL_CLOSED, f"{len(us)} samples"))
        out.append(CheckReport.make(f"minimal_residual_{tag}", cr, TOL_CLOSED))
    s0 = SurfaceSpec("I", 1.0, 1.0, closed_form("1", "u"))
    out.append(CheckReport.away_from_zero(
        "negative_control_minimal", [class_residual(SpecialClass.minimal(), s0, 0.0)], 0.1,
        "f=1, g=u, a=b=1, u=0"))
    return out


def suite_conservation(params):
    out = []
    for st, p, s in minimal_specs():
        us = _valid_grid(s, params.n_samples)
        tag = f"{st.name}(A={p.A}, C={p.C:.6g}, eps={p.eps}, a={p.alpha}, b={p.beta})"
        vals, rel = [], []
        for u in us:
            fc = inv.frenet_coeffs(s, u)
            G = inv._terms(s, u).G
            vals.append(G * G * (fc.mu**2 + fc.nu1**2))
            q = point_jets(s, u)
            if st is SurfaceType.I:
                rel.append((p.A + p.beta**2 * q.g**2) * q.fp**2 - (p.A - p.alpha**2 * q.f**2) * q.gp**2)
            else:
                rel.append((p.beta**2 * q.g**2 - p.A) * q.fp**2 - (p.A - p.alpha**2 * q.f**2) * q.gp**2)
        vals = np.array(vals)
        target = p.A * (p.alpha**2 + p.beta**2)
        drift = (vals - vals.mean()) / abs(vals.mean())
        out.append(CheckReport.make(
            f"conservation_drift_{tag}", drift, TOL_CLOSED, f"G^2(mu^2+nu1^2) mean={vals.mean():.17g}"))
        out.append(CheckReport.make(
            f"conservation_value_{tag}", (vals - target) / target, TOL_CLOSED, f"expected A(a^2+b^2)={target:.17g}"))
        out.append(CheckReport.make(f"meridian_relation_{tag}", rel, TOL_CLOSED))
    return out


# -- ODE families --------------------------------------------------------------------


FLAT_IVPS = {
    SurfaceType.I: (1.0, 0.5, 0.0, 1.3),
    SurfaceType.II: (1.0, 0.5, 0.2, 2.0),
}
FLAT_NORMAL_IVPS = {
    SurfaceType.I: (1.0, 0.5, 0.0, 2.0),
    SurfaceType.II: (1.0, 0.5, 0.0, 2.0),
}
CMC_CONSTANTS = (0.5, 1.0, 2.0)
CMC_IVPS = {
    SurfaceType.I: (1.0, 0.5, 0.0, 2.0),
    SurfaceType.II: (1.0, 0.5, 0.0, 1.3),
}


def _midpoints(m):
    return (m.u[:-1] + m.u[1:]) / 2


def _ode_run(sclass, st, ivp, h):
    u0, f0, fp0, u_end = ivp
    m = integrate_special(sclass, st, 1.0, 1.0, IvpConfig(u0, f0, fp0, u_end, h))
    return m, SurfaceSpec(st, 1.0, 1.0, m)


def _trunc_note(m):
    return f"span [{m.u[0]:.6g}, {m.u[-1]:.6g}], {m.u.size} nodes" + (
        f"; TRUNCATED: {m.note}" if m.truncated else "")


def _span_report(name, m):
    """A truncated run fails: the requested span was not covered."""
    return CheckReport.make(name, [1.0 if m.truncated else 0.0], 0.0, _trunc_note(m))


def endpoint_ratio(sclass, st, ivp, hs):
    """``(f_h0 - f_h1) / (f_h1 - f_h2)`` for successive step halvings."""
    ends = []
    for h in hs:
        m, _ = _ode_run(sclass, st, ivp, h)
        if m.truncated:
            return math.nan, ends
        ends.append(float(m.f[-1]))
    return (ends[0] - ends[1]) / (ends[1] - ends[2]), ends


def suite_flat(params):
    out = []
    cls = SpecialClass.flat()
    for st in (SurfaceType.I, SurfaceType.II):
        ivp = FLAT_IVPS[st]
        m, s = _ode_run(cls, st, ivp, params.h)
        mids = _midpoints(m)
        note = f"IVP (u0, f0, fp0)={ivp[:3]}, h={params.h:g}; off-grid (Hermite) points; {_trunc_note(m)}"
        out.append(_span_report(f"flat_span_{st.name}", m))
        out.append(CheckReport.make(
            f"flat_K_{st.name}", [inv.gauss_curvature(s, u) for u in mids], TOL_ODE, note))
        out.append(CheckReport.make(
            f"flat_residual_{st.name}", [class_residual(cls, s, u) for u in mids], TOL_OFFGRID_CLASS, note))
        hs = (10 * params.h, 5 * params.h, 2.5 * params.h)
        ratio, ends = endpoint_ratio(cls, st, ivp, hs)
        out.append(CheckReport.make(
            f"flat_rk4_order_{st.name}", [ratio - 16.0], 4.0,
            f"endpoint f(u_end) for hs={list(hs)}: {ends}; ratio={ratio:.4f}"))
    return out


def suite_flat_normal(params):
    out = []
    cls = SpecialClass.flat_normal()
    for st in (SurfaceType.I, SurfaceType.II):
        ivp = FLAT_NORMAL_IVPS[st]
        m, s = _ode_run(cls, st, ivp, params.h)
        mids = _midpoints(m)
        note = f"IVP (u0, f0, fp0)={ivp[:3]}, h={params.h:g}; off-grid (Hermite) points; {_trunc_note(m)}"
        out.append(_span_report(f"flat_normal_span_{st.name}", m))
        out.append(CheckReport.make(
            f"flat_normal_kappa_{st.name}", [inv.normal_curvature(s, u) for u in mids], TOL_ODE, note))
        out.append(CheckReport.make(
            f"flat_normal_residual_{st.name}", [class_residual(cls, s, u) for u in mids], TOL_OFFGRID_CLASS, note))
    s0 = SurfaceSpec("I", 1.0, 1.0, closed_form("1", "u"))
    out.append(CheckReport.away_from_zero(
        "negative_control_flat_normal", [class_residual(cls, s0, 0.0)], 0.1, "f=1, g=u, a=b=1, u=0"))
    return out


def suite_cmc(params):
    out = []
    for st in (SurfaceType.I, SurfaceType.II):
        for c in CMC_CONSTANTS:
            cls = SpecialClass.cmc(c)
            ivp = CMC_IVPS[st]
            m, s = _ode_run(cls, st, ivp, params.h)
            mids = _midpoints(m)
            note = f"IVP (u0, f0, fp0)={ivp[:3]}, h={params.h:g}; off-grid (Hermite) points; {_trunc_note(m)}"
            out.append(_span_report(f"cmc_span_{st.name}_c={c:g}", m))
            out.append(CheckReport.make(
                f"cmc_HH_{st.name}_c={c:g}",
                [inv.mean_curvature(s, u).Hnorm2 - c * c / 4 for u in mids], TOL_ODE, note))
            out.append(CheckReport.make(
                f"cmc_residual_{st.name}_c={c:g}", [class_residual(cls, s, u) for u in mids], TOL_ODE, note))
    return out


# -- PNMC ----------------------------------------------------------------------------------


PNMC_CASES = (
    (SurfaceType.I, 1.0, 1.0, 1.0),
    (SurfaceType.I, 0.5, 1.3, 0.7),
    (SurfaceType.I, -2.0, 0.8, 1.5),
    (SurfaceType.II, 1.0, 1.0, 1.0),
    (SurfaceType.II, 1.5, 1.0, 2.0),
)


def suite_pnmc(params):
    out = []
    for st, C, a, b in PNMC_CASES:
        m = pnmc_meridian(st, C, alpha=a, beta=b)
        s = SurfaceSpec(st, a, b, m)
        us = _valid_grid(s, params.n_samples)
        tag = f"{st.name}(C={C:g}, a={a:g}, b={b:g})"
        dyn = [inv.normal_connection_coeffs(s, u).dyn for u in us]
        out.append(CheckReport.make(f"pnmc_dyn_{tag}", dyn, TOL_ZERO, f"domain {m.domain}"))
        out.append(CheckReport.make(f"pnmc_kappa_{tag}", [inv.normal_curvature(s, u) for u in us], TOL_IDENTITY))
        out.append(CheckReport.make(
            f"pnmc_residual_{tag}", [class_residual(SpecialClass.pnmc(C), s, u) for u in us], TOL_CLOSED))
        if st is SurfaceType.I:
            out.append(CheckReport.make(
                f"pnmc_Hnorm2_{tag}", [inv.mean_curvature(s, u).Hnorm2 - 1.0 / C**2 for u in us], TOL_CLOSED,
                "Hnorm2 = 1/C^2"))
            # constant H: the CMC identity holds with c = -2 H2
            c = -2.0 * inv.mean_curvature(s, us[0]).H2
            out.append(CheckReport.make(
                f"pnmc_is_cmc_{tag}", [class_residual(SpecialClass.cmc(c), s, u) for u in us], TOL_IDENTITY,
                f"c={c:.17g}"))
    # converse: a perturbed meridian is not PNMC
    iv = Interval(0.5, 1.5)
    sp = SurfaceSpec("I", 1.0, 1.0, closed_form("sqrt(u^2+1)+0.01*u", "u", iv))
    dyn = [inv.normal_connection_coeffs(sp, u).dyn for u in iv.grid(101)]
    out.append(CheckReport.away_from_zero(
        "pnmc_converse_perturbed", [max(abs(d) for d in dyn)], 1e-4, "f=sqrt(u^2+1)+0.01u on [0.5, 1.5]"))
    return out


# -- driver ----------------------------------------------------------------------------------


_SUITE_FUNCS = {
    "frames": suite_frames,
    "oracles": suite_oracles,
    "flat": suite_flat,
    "flat_normal": suite_flat_normal,
    "minimal": suite_minimal,
    "cmc": suite_cmc,
    "pnmc": suite_pnmc,
    "structural": suite_structural,
    "conservation": suite_conservation,
}


def run_suite(suite_name, params=None):
    """Run one suite (or ``all``) and return its reports."""
    if params is None:
        params = SuiteParams()
    elif isinstance(params, dict):
        params = SuiteParams(**params)
    if suite_name == "all":
        return [r for name in SUITES for r in _SUITE_FUNCS[name](params)]
    if suite_name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite_name!r}; choose from {', '.join(SUITES + ('all',))}")
    return _SUITE_FUNCS[suite_name](params)


def all_passed(reports):
    return all(r.passed for r in reports)


def _json_float(x):
    return x if math.isfinite(x) else str(x)


def reports_to_json(reports, indent=2):
    rows = []
    for r in reports:
        d = asdict(r)
        d["max_abs_residual"] = _json_float(d["max_abs_residual"])
        rows.append(d)
    return json.dumps(rows, indent=indent)


def format_table(reports):
    width = max([len(r.check_name) for r in reports] + [10])
    lines = [f"{'check':<{width}}  {'n':>5}  {'max |res|':>11}  {'tol':>9}  result"]
    for r in reports:
        lines.append(
            f"{r.check_name:<{width}}  {r.n_points:>5}  {r.max_abs_residual:>11.3e}  "
            f"{r.tolerance:>9.1e}  {'PASS' if r.passed else 'FAIL'}"
        )
    n_fail = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - n_fail}/{len(reports)} checks passed")
    return "\n".join(lines)


__all__ = [
    "CheckReport", "FdConvergence", "SuiteParams", "SUITES", "DEFAULT_SEED",
    "run_suite", "fd_convergence", "all_passed", "reports_to_json", "format_table",
    "fixed_meridians", "random_points", "endpoint_ratio"
]
