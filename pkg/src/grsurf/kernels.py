"""Hot loops, served by the compiled extension when it is importable.

Set ``GRSURF_PURE_PYTHON=1`` to force the pure-Python implementation.
``BACKEND`` names the active one.
"""
import os

import numpy as np

from . import _pykernels as py
from ._pykernels import (  # noqa: F401  (re-exported codes)
    CMC,
    FLAT,
    FLAT_NORMAL,
    GUARD_FLAT,
    GUARD_G,
    GUARD_SPEED,
    INVALID,
    NONFINITE,
    OK,
)

STATUS_NAMES = {
    OK: "ok",
    GUARD_SPEED: "1 - f'^2 reached the lightlike guard",
    GUARD_G: "rotation factor alpha^2 f^2 +/- beta^2 u^2 reached its guard",
    GUARD_FLAT: "alpha^2 f + beta^2 u f' reached its guard",
    INVALID: "point left the validity region",
    NONFINITE: "non-finite right-hand side",
}

_impl = py
BACKEND = "python"
if not os.environ.get("GRSURF_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = py


def rhs(kind, stype, alpha, beta, c, u, f, fp):
    return _impl.rhs(kind, stype, alpha, beta, c, u, f, fp)


def node_valid(stype, alpha, beta, u, f, fp):
    return _impl.node_valid(stype, alpha, beta, u, f, fp)


def rk4(kind, stype, alpha, beta, c, u0, f0, fp0, u_end, h):
    return _impl.rk4(
        int(kind), int(stype), float(alpha), float(beta), float(c),
        float(u0), float(f0), float(fp0), float(u_end), float(h),
    )


def hermite_eval(xs, ys, ds, d2s, x):
    arrs = [np.ascontiguousarray(a, dtype=float) for a in (xs, ys, ds, d2s, x)]
    return _impl.hermite_eval(*arrs)
