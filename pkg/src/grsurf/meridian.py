"""Meridian curves ``(f(u), g(u))`` with exact second-order derivative access.

Two kinds exist: closed-form meridians built from expression sources and
differentiated by forward-mode AD, and sampled meridians (typically the
output of an ODE integration) interpolated by cubic Hermite splines.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import kernels
from .dsl import compile_jet, parse_meridian, to_source
from .errors import DomainError
from .jet import Jet2

CSV_HEADER = ("u", "f", "fp", "fpp", "g", "gp", "gpp")


def fmt17(x):
    """17 significant digits, locale independent."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class Interval:
    lo: float = -math.inf
    hi: float = math.inf
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, u):
        if u < self.lo or u > self.hi:
            return False
        if u == self.lo and self.lo_open:
            return False
        if u == self.hi and self.hi_open:
            return False
        return True

    def grid(self, n):
        """``n`` evenly spaced points of the interval, open ends excluded."""
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("cannot grid an unbounded interval")
        if n < 2:
            raise ValueError("need at least 2 grid points")
        extra = int(self.lo_open) + int(self.hi_open)
        pts = np.linspace(self.lo, self.hi, n + extra)
        if self.lo_open:
            pts = pts[1:]
        if self.hi_open:
            pts = pts[:-1]
        return pts

    def shrink(self, frac):
        """Closed sub-interval with ``frac`` of the width trimmed from each end."""
        w = self.hi - self.lo
        return Interval(self.lo + frac * w, self.hi - frac * w)


REAL_LINE = Interval()


class Meridian:
    """Common interface: ``jets(u)`` returns the jets of ``f`` and ``g`` at ``u``."""

    domain: Interval

    def jets(self, u) -> tuple[Jet2, Jet2]:
        raise NotImplementedError

    def values(self, u):
        """``(f(u), g(u))`` without derivatives."""
        fj, gj = self.jets(u)
        return fj.val, gj.val

    def _check_domain(self, u):
        if not math.isfinite(u) or u not in self.domain:
            raise DomainError(f"u={u!r} outside meridian domain {self.domain}")


@dataclass(frozen=True, eq=False)
class ClosedFormMeridian(Meridian):
    """Meridian whose components are expressions in ``u``."""

    f_src: str
    g_src: str = "u"
    domain: Interval = REAL_LINE
    _f: Callable = field(init=False, repr=False)
    _g: Callable = field(init=False, repr=False)

    kind = "closed_form"

    def __post_init__(self):
        object.__setattr__(self, "_f", compile_jet(parse_meridian(self.f_src)))
        object.__setattr__(self, "_g", compile_jet(parse_meridian(self.g_src)))

    def jets(self, u):
        self._check_domain(u)
        x = Jet2.var(u)
        fj, gj = self._f(x), self._g(x)
        if not (fj.is_finite() and gj.is_finite()):
            raise DomainError(f"non-finite meridian jet at u={u!r}")
        return fj, gj

    def canonical(self):
        """The same meridian with normalized expression sources."""
        return ClosedFormMeridian(
            to_source(parse_meridian(self.f_src)), to_source(parse_meridian(self.g_src)), self.domain
        )


class SampledMeridian(Meridian):
    """Tabulated meridian; stored jets are returned exactly at the nodes."""

    kind = "sampled"

    def __init__(self, u, f, fp, fpp, g=None, gp=None, gpp=None, truncated=False, note=""):
        u = np.ascontiguousarray(u, dtype=float)
        if u.ndim != 1 or u.size < 2:
            raise ValueError("a sampled meridian needs at least 2 nodes")
        if not np.all(np.diff(u) > 0):
            raise ValueError("sample grid must be strictly increasing")
        if g is None:
            g, gp, gpp = u.copy(), np.ones_like(u), np.zeros_like(u)
        cols = [np.ascontiguousarray(c, dtype=float) for c in (f, fp, fpp, g, gp, gpp)]
        for c in cols:
            if c.shape != u.shape:
                raise ValueError("all sample columns must match the grid length")
            if not np.all(np.isfinite(c)):
                raise ValueError("sample columns must be finite")
        self.u = u
        self.f, self.fp, self.fpp, self.g, self.gp, self.gpp = cols
        for arr in (self.u, *cols):
            arr.setflags(write=False)
        self.truncated = truncated
        self.note = note
        self.domain = Interval(float(u[0]), float(u[-1]))

    def __len__(self):
        return self.u.size

    def jets(self, u):
        self._check_domain(u)
        k = int(np.searchsorted(self.u, u))
        if k < self.u.size and self.u[k] == u:
            return (
                Jet2(self.f[k], self.fp[k], self.fpp[k]),
                Jet2(self.g[k], self.gp[k], self.gpp[k]),
            )
        x = np.array([u])
        fv, f1, f2 = kernels.hermite_eval(self.u, self.f, self.fp, self.fpp, x)
        gv, g1, g2 = kernels.hermite_eval(self.u, self.g, self.gp, self.gpp, x)
        return Jet2(fv[0], f1[0], f2[0]), Jet2(gv[0], g1[0], g2[0])

    def jets_many(self, x):
        """Vectorized ``(f, fp, fpp, g, gp, gpp)`` arrays at the points ``x``."""
        x = np.ascontiguousarray(x, dtype=float)
        if x.size and (x.min() < self.u[0] or x.max() > self.u[-1]):
            raise DomainError("evaluation points outside the sampled span")
        return (
            *kernels.hermite_eval(self.u, self.f, self.fp, self.fpp, x),
            *kernels.hermite_eval(self.u, self.g, self.gp, self.gpp, x),
        )

    def to_csv(self, stream=None):
        """Write the node table; returns the text when ``stream`` is None."""
        own = stream is None
        if own:
            stream = io.StringIO()
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in zip(self.u, self.f, self.fp, self.fpp, self.g, self.gp, self.gpp):
            w.writerow([fmt17(v) for v in row])
        if own:
            return stream.getvalue()
        return None

    @classmethod
    def from_csv(cls, stream):
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError("empty meridian CSV") from None
        if tuple(h.strip() for h in header) != CSV_HEADER:
            raise ValueError(f"meridian CSV header must be {','.join(CSV_HEADER)}")
        rows = [[float(v) for v in r] for r in reader if r]
        if any(len(r) != len(CSV_HEADER) for r in rows):
            raise ValueError("meridian CSV rows must have 7 columns")
        cols = np.array(rows, dtype=float).T
        if cols.size == 0:
            raise ValueError("meridian CSV has no rows")
        return cls(*cols)

    @classmethod
    def from_closed_form(cls, m, us):
        """Tabulate a closed-form meridian's jets on the grid ``us``."""
        rows = []
        for u in us:
            fj, gj = m.jets(float(u))
            rows.append((u, *fj, *gj))
        cols = np.array(rows, dtype=float).T
        return cls(*cols)


def closed_form(f_src, g_src="u", domain=REAL_LINE):
    return ClosedFormMeridian(f_src, g_src, domain)


def eval_jet(m, u):
    """Jets of ``f`` and ``g`` at ``u``."""
    return m.jets(float(u))


def fd_oracle(m, u, h):
    """Central-difference estimates of the jets, built from values only.

    Used to cross-check the AD and interpolation paths; never feeds back
    into them.
    """
    if not h > 0:
        raise ValueError("step h must be positive")
    u = float(u)
    for x in (u - h, u + h):
        if x not in m.domain:
            raise DomainError(f"stencil point {x!r} outside meridian domain {m.domain}")
    fm, gm = m.values(u - h)
    f0, g0 = m.values(u)
    fp, gp = m.values(u + h)
    return (
        Jet2(f0, (fp - fm) / (2 * h), (fp - 2 * f0 + fm) / (h * h)),
        Jet2(g0, (gp - gm) / (2 * h), (gp - 2 * g0 + gm) / (h * h)),
    )
