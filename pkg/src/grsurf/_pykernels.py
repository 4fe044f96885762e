"""Pure-Python kernels; reference behaviour for the compiled ``_ckernels``.

Both modules must agree bit-for-bit on the RK4 loop and to roundoff on the
Hermite evaluation (the test-suite checks this).
"""
import math

import numpy as np

# Special-class codes.
FLAT = 0
FLAT_NORMAL = 1
CMC = 2

# Status codes.
OK = 0
GUARD_SPEED = 1
GUARD_G = 2
GUARD_FLAT = 3
INVALID = 4
NONFINITE = 5

SPEED_GUARD = 1e-10
DENOM_GUARD = 1e-12
VALID_EPS = 1e-12


def rhs(kind, stype, alpha, beta, c, u, f, fp, side=0.0):
    """Second derivative ``f''`` forced by the class ODE in the ``g = u`` chart.

    Returns ``(status, fpp)``; ``fpp`` is 0.0 whenever ``status`` is non-zero.
    A non-zero ``side`` is the sign the flat denominator ``a^2 f + b^2 u f'``
    had at the initial point; a sign change means the solution crossed the
    singular set between samples, so it trips the guard as well (type II
    additionally requires ``G < 0``).
    """
    a2 = alpha * alpha
    b2 = beta * beta
    lin = a2 * f + b2 * u * fp
    if stype == 1:
        s = 1.0 - fp * fp
        if s <= SPEED_GUARD:
            return GUARD_SPEED, 0.0
        G = a2 * f * f + b2 * u * u
        if G <= DENOM_GUARD:
            return GUARD_G, 0.0
        if kind == FLAT:
            if abs(lin) <= DENOM_GUARD or lin * side < 0.0:
                return GUARD_FLAT, 0.0
            w = f - u * fp
            val = -s * a2 * b2 * w * w / (lin * G)
        elif kind == FLAT_NORMAL:
            val = s * lin / G
        else:
            val = s * (-lin / G + c * math.sqrt(s))
    else:
        s = 1.0 + fp * fp
        G = a2 * f * f - b2 * u * u
        if abs(G) <= DENOM_GUARD or (side != 0.0 and G > 0.0):
            return GUARD_G, 0.0
        if kind == FLAT:
            if abs(lin) <= DENOM_GUARD or lin * side < 0.0:
                return GUARD_FLAT, 0.0
            w = u * fp - f
            val = s * a2 * b2 * w * w / (G * lin)
        elif kind == FLAT_NORMAL:
            val = -s * lin / G
        else:
            val = s * (lin / G + c * math.sqrt(s))
    if not math.isfinite(val):
        return NONFINITE, 0.0
    return OK, val


def node_valid(stype, alpha, beta, u, f, fp):
    """Validity of the ``g = u`` surface point, with the guard band."""
    a2f2 = alpha * alpha * f * f
    b2u2 = beta * beta * u * u
    if stype == 1:
        return fp * fp - 1.0 < -VALID_EPS and a2f2 + b2u2 > VALID_EPS
    return a2f2 - b2u2 < -VALID_EPS


def rk4(kind, stype, alpha, beta, c, u0, f0, fp0, u_end, h):
    """Classical RK4 on ``(f, f')`` from ``u0`` towards ``u_end``.

    The span is split into ``ceil(|u_end - u0| / h)`` equal steps.  Returns
    ``(u, f, fp, fpp, status)``; on a guard hit the arrays end at the last
    accepted node and ``status`` names the guard.
    """
    span = u_end - u0
    n = max(1, int(math.ceil(abs(span) / h - 1e-9)))
    dh = span / n
    us = np.empty(n + 1)
    fs = np.empty(n + 1)
    fps = np.empty(n + 1)
    fpps = np.empty(n + 1)
    lin0 = alpha * alpha * f0 + beta * beta * u0 * fp0
    side = 1.0 if lin0 >= 0.0 else -1.0
    st, a = rhs(kind, stype, alpha, beta, c, u0, f0, fp0, side)
    if st == OK and not node_valid(stype, alpha, beta, u0, f0, fp0):
        st = INVALID
    if st != OK:
        return us[:0], fs[:0], fps[:0], fpps[:0], st
    us[0], fs[0], fps[0], fpps[0] = u0, f0, fp0, a
    u, f, fp = u0, f0, fp0
    half = 0.5 * dh
    count = 1
    status = OK
    for i in range(1, n + 1):
        k1f, k1p = fp, a
        st, k2p = rhs(kind, stype, alpha, beta, c, u + half, f + half * k1f, fp + half * k1p, side)
        if st != OK:
            status = st
            break
        k2f = fp + half * k1p
        st, k3p = rhs(kind, stype, alpha, beta, c, u + half, f + half * k2f, fp + half * k2p, side)
        if st != OK:
            status = st
            break
        k3f = fp + half * k2p
        st, k4p = rhs(kind, stype, alpha, beta, c, u + dh, f + dh * k3f, fp + dh * k3p, side)
        if st != OK:
            status = st
            break
        k4f = fp + dh * k3p
        fn = f + dh / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f)
        fpn = fp + dh / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        un = u0 + i * dh
        st, an = rhs(kind, stype, alpha, beta, c, un, fn, fpn, side)
        if st == OK and not node_valid(stype, alpha, beta, un, fn, fpn):
            st = INVALID
        if st != OK:
            status = st
            break
        u, f, fp, a = un, fn, fpn, an
        us[i], fs[i], fps[i], fpps[i] = u, f, fp, a
        count += 1
    return us[:count], fs[:count], fps[:count], fpps[:count], status


def hermite_eval(xs, ys, ds, d2s, x):
    """Cubic Hermite interpolant of ``(ys, ds)`` on the grid ``xs``.

    Returns value, first and second derivative at each point of ``x``; at a
    grid node the stored ``(ys, ds, d2s)`` are returned unchanged.  Points
    must lie inside ``[xs[0], xs[-1]]``.
    """
    m = xs.shape[0]
    out_v = np.empty(x.shape[0])
    out_1 = np.empty(x.shape[0])
    out_2 = np.empty(x.shape[0])
    for j in range(x.shape[0]):
        t_x = x[j]
        lo, hi = 0, m - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if xs[mid] <= t_x:
                lo = mid
            else:
                hi = mid
        if t_x == xs[lo]:
            out_v[j], out_1[j], out_2[j] = ys[lo], ds[lo], d2s[lo]
            continue
        if t_x == xs[hi]:
            out_v[j], out_1[j], out_2[j] = ys[hi], ds[hi], d2s[hi]
            continue
        h = xs[hi] - xs[lo]
        t = (t_x - xs[lo]) / h
        t2 = t * t
        t3 = t2 * t
        y0, y1 = ys[lo], ys[hi]
        m0, m1 = ds[lo] * h, ds[hi] * h
        out_v[j] = (
            (2 * t3 - 3 * t2 + 1) * y0
            + (t3 - 2 * t2 + t) * m0
            + (-2 * t3 + 3 * t2) * y1
            + (t3 - t2) * m1
        )
        out_1[j] = (
            (6 * t2 - 6 * t) * y0
            + (3 * t2 - 4 * t + 1) * m0
            + (-6 * t2 + 6 * t) * y1
            + (3 * t2 - 2 * t) * m1
        ) / h
        out_2[j] = (
            (12 * t - 6) * y0 + (6 * t - 4) * m0 + (-12 * t + 6) * y1 + (6 * t - 2) * m1
        ) / (h * h)
    return out_v, out_1, out_2
