# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels`` operation for operation."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, ceil, isfinite

cnp.import_array()

cdef enum:
    FLAT = 0
    FLAT_NORMAL = 1
    CMC = 2

cdef enum:
    OK = 0
    GUARD_SPEED = 1
    GUARD_G = 2
    GUARD_FLAT = 3
    INVALID = 4
    NONFINITE = 5

cdef double SPEED_GUARD = 1e-10
cdef double DENOM_GUARD = 1e-12
cdef double VALID_EPS = 1e-12


cdef int _rhs(int kind, int stype, double alpha, double beta, double c,
              double u, double f, double fp, double side, double* out) nogil:
    cdef double a2 = alpha * alpha
    cdef double b2 = beta * beta
    cdef double lin = a2 * f + b2 * u * fp
    cdef double s, G, w, val
    out[0] = 0.0
    if stype == 1:
        s = 1.0 - fp * fp
        if s <= SPEED_GUARD:
            return GUARD_SPEED
        G = a2 * f * f + b2 * u * u
        if G <= DENOM_GUARD:
            return GUARD_G
        if kind == FLAT:
            if fabs(lin) <= DENOM_GUARD or lin * side < 0.0:
                return GUARD_FLAT
            w = f - u * fp
            val = -s * a2 * b2 * w * w / (lin * G)
        elif kind == FLAT_NORMAL:
            val = s * lin / G
        else:
            val = s * (-lin / G + c * sqrt(s))
    else:
        s = 1.0 + fp * fp
        G = a2 * f * f - b2 * u * u
        if fabs(G) <= DENOM_GUARD or (side != 0.0 and G > 0.0):
            return GUARD_G
        if kind == FLAT:
            if fabs(lin) <= DENOM_GUARD or lin * side < 0.0:
                return GUARD_FLAT
            w = u * fp - f
            val = s * a2 * b2 * w * w / (G * lin)
        elif kind == FLAT_NORMAL:
            val = -s * lin / G
        else:
            val = s * (lin / G + c * sqrt(s))
    if not isfinite(val):
        return NONFINITE
    out[0] = val
    return OK


cdef bint _node_valid(int stype, double alpha, double beta,
                      double u, double f, double fp) nogil:
    cdef double a2f2 = alpha * alpha * f * f
    cdef double b2u2 = beta * beta * u * u
    if stype == 1:
        return fp * fp - 1.0 < -VALID_EPS and a2f2 + b2u2 > VALID_EPS
    return a2f2 - b2u2 < -VALID_EPS


def rhs(int kind, int stype, double alpha, double beta, double c,
        double u, double f, double fp, double side=0.0):
    cdef double out
    cdef int st = _rhs(kind, stype, alpha, beta, c, u, f, fp, side, &out)
    return st, out


def node_valid(int stype, double alpha, double beta, double u, double f, double fp):
    return bool(_node_valid(stype, alpha, beta, u, f, fp))


def rk4(int kind, int stype, double alpha, double beta, double c,
        double u0, double f0, double fp0, double u_end, double h):
    cdef double span = u_end - u0
    cdef long n = <long>ceil(fabs(span) / h - 1e-9)
    if n < 1:
        n = 1
    cdef double dh = span / n
    cdef double half = 0.5 * dh
    us_a = np.empty(n + 1)
    fs_a = np.empty(n + 1)
    fps_a = np.empty(n + 1)
    fpps_a = np.empty(n + 1)
    cdef double[::1] us = us_a
    cdef double[::1] fs = fs_a
    cdef double[::1] fps = fps_a
    cdef double[::1] fpps = fpps_a
    cdef double a, k1f, k1p, k2f, k2p, k3f, k3p, k4f, k4p, fn, fpn, un, an
    cdef double u = u0, f = f0, fp = fp0
    cdef int st
    cdef int status = OK
    cdef long i, count
    cdef double side = 1.0 if alpha * alpha * f0 + beta * beta * u0 * fp0 >= 0.0 else -1.0
    st = _rhs(kind, stype, alpha, beta, c, u0, f0, fp0, side, &a)
    if st == OK and not _node_valid(stype, alpha, beta, u0, f0, fp0):
        st = INVALID
    if st != OK:
        return us_a[:0], fs_a[:0], fps_a[:0], fpps_a[:0], st
    us[0] = u0
    fs[0] = f0
    fps[0] = fp0
    fpps[0] = a
    count = 1
    with nogil:
        for i in range(1, n + 1):
            k1f = fp
            k1p = a
            st = _rhs(kind, stype, alpha, beta, c, u + half, f + half * k1f, fp + half * k1p, side, &k2p)
            if st != OK:
                status = st
                break
            k2f = fp + half * k1p
            st = _rhs(kind, stype, alpha, beta, c, u + half, f + half * k2f, fp + half * k2p, side, &k3p)
            if st != OK:
                status = st
                break
            k3f = fp + half * k2p
            st = _rhs(kind, stype, alpha, beta, c, u + dh, f + dh * k3f, fp + dh * k3p, side, &k4p)
            if st != OK:
                status = st
                break
            k4f = fp + dh * k3p
            fn = f + dh / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f)
            fpn = fp + dh / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
            un = u0 + i * dh
            st = _rhs(kind, stype, alpha, beta, c, un, fn, fpn, side, &an)
            if st == OK and not _node_valid(stype, alpha, beta, un, fn, fpn):
                st = INVALID
            if st != OK:
                status = st
                break
            u = un
            f = fn
            fp = fpn
            a = an
            us[i] = u
            fs[i] = f
            fps[i] = fp
            fpps[i] = a
            count += 1
    return us_a[:count], fs_a[:count], fps_a[:count], fpps_a[:count], status


def hermite_eval(const double[::1] xs, const double[::1] ys, const double[::1] ds,
                 const double[::1] d2s, const double[::1] x):
    cdef Py_ssize_t m = xs.shape[0]
    cdef Py_ssize_t nx = x.shape[0]
    out_v_a = np.empty(nx)
    out_1_a = np.empty(nx)
    out_2_a = np.empty(nx)
    cdef double[::1] out_v = out_v_a
    cdef double[::1] out_1 = out_1_a
    cdef double[::1] out_2 = out_2_a
    cdef Py_ssize_t j, lo, hi, mid
    cdef double tx, h, t, t2, t3, y0, y1, m0, m1
    with nogil:
        for j in range(nx):
            tx = x[j]
            lo = 0
            hi = m - 1
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if xs[mid] <= tx:
                    lo = mid
                else:
                    hi = mid
            if tx == xs[lo]:
                out_v[j] = ys[lo]
                out_1[j] = ds[lo]
                out_2[j] = d2s[lo]
                continue
            if tx == xs[hi]:
                out_v[j] = ys[hi]
                out_1[j] = ds[hi]
                out_2[j] = d2s[hi]
                continue
            h = xs[hi] - xs[lo]
            t = (tx - xs[lo]) / h
            t2 = t * t
            t3 = t2 * t
            y0 = ys[lo]
            y1 = ys[hi]
            m0 = ds[lo] * h
            m1 = ds[hi] * h
            out_v[j] = ((2 * t3 - 3 * t2 + 1) * y0
                        + (t3 - 2 * t2 + t) * m0
                        + (-2 * t3 + 3 * t2) * y1
                        + (t3 - t2) * m1)
            out_1[j] = ((6 * t2 - 6 * t) * y0
                        + (3 * t2 - 4 * t + 1) * m0
                        + (-6 * t2 + 6 * t) * y1
                        + (3 * t2 - 2 * t) * m1) / h
            out_2[j] = ((12 * t - 6) * y0 + (6 * t - 4) * m0
                        + (-12 * t + 6) * y1 + (6 * t - 2) * m1) / (h * h)
    return out_v_a, out_1_a, out_2_a
