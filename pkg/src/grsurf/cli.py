"""Command-line front end.

Subcommands::

    grsurf invariants   tabulate every invariant over a u grid (CSV or JSON)
    grsurf generate F   write a family meridian as a sampled-meridian CSV
    grsurf verify S     run a verification suite (JSON report, table)
    grsurf mesh         sample the immersion on a (u, v) grid (CSV or OBJ)

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 generation truncated at a singularity guard.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from . import verify
from .errors import GrsError
from .families import (
    IvpConfig,
    MinimalParams,
    SpecialClass,
    integrate_special,
    minimal_meridian,
    pnmc_meridian,
)
from .invariants import InvariantSample, invariant_sample
from .meridian import ClosedFormMeridian, SampledMeridian, fmt17
from .surface import SurfaceSpec, SurfaceType, position, validity

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3

INVARIANT_HEADER = ("u", "valid") + InvariantSample.FIELDS
MESH_HEADER = ("u", "v", "x1", "x2", "x3", "x4")
PROJECTIONS = {"drop-x4": (0, 1, 2), "drop-x3": (0, 1, 3), "drop-x1": (1, 2, 3)}
DEFAULT_V_COUNT = 64
CLOSED_FAMILY_SAMPLES = 201

_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


class UsageError(Exception):
    pass


def decimal(text):
    """Plain decimal literal (optional exponent); no expressions, nan or inf."""
    if not _DECIMAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"not a plain decimal number: {text!r}")
    return float(text)


def integer(text):
    if not re.match(r"^[+-]?\d+$", text.strip()):
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(text)


@dataclass(frozen=True)
class GridRange:
    start: float
    end: float
    count: int
    endpoint: bool = True

    def points(self):
        return np.linspace(self.start, self.end, self.count, endpoint=self.endpoint)


def grid_range(text):
    """``start:end:count`` with ``start < end`` and ``count >= 2``; both ends included."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"range must be start:end:count, got {text!r}")
    a, b = decimal(parts[0]), decimal(parts[1])
    n = integer(parts[2])
    if not a < b:
        raise argparse.ArgumentTypeError("range start must be below its end")
    if n < 2:
        raise argparse.ArgumentTypeError("range count must be at least 2")
    return GridRange(a, b, n)


DEFAULT_V_RANGE = GridRange(0.0, 2 * math.pi, DEFAULT_V_COUNT, endpoint=False)


# -- argument parsing ------------------------------------------------------------------


def _add_surface_args(p, meridian=True):
    p.add_argument("--type", dest="stype", default="I", choices=["I", "II"], help="surface type")
    p.add_argument("--alpha", type=decimal, default=1.0, help="Euclidean rotation rate")
    p.add_argument("--beta", type=decimal, default=1.0, help="hyperbolic rotation rate")
    if meridian:
        p.add_argument("--f", dest="f_src", help="meridian f(u) in the expression language")
        p.add_argument("--g", dest="g_src", default=None, help="meridian g(u) (default u)")
        p.add_argument("--meridian-csv", help="sampled meridian CSV")
        p.add_argument("--family", choices=["minimal", "pnmc"], help="closed-form family meridian")


def _add_family_args(p):
    p.add_argument("--A", dest="A", type=decimal, default=1.0, help="minimal: constant A > 0")
    p.add_argument("--C", dest="C", type=decimal, default=None, help="minimal phase / PNMC constant")
    p.add_argument("--eps", type=integer, default=1, choices=[1, -1], help="minimal: branch sign")
    p.add_argument("--sign", type=integer, default=1, choices=[1, -1], help="PNMC: sign of f")
    p.add_argument("--side", type=integer, default=1, choices=[1, -1], help="PNMC type II: u > 0 or u < 0")


def _add_ivp_args(p):
    p.add_argument("--u0", type=decimal, default=1.0)
    p.add_argument("--f0", type=decimal, default=0.5)
    p.add_argument("--fp0", type=decimal, default=0.0)
    p.add_argument("--u-end", type=decimal, default=2.0)
    p.add_argument("--h", type=decimal, default=1e-3, help="RK4 step")
    p.add_argument("--c", type=decimal, default=None, help="CMC: constant c = nu1 - nu2")


def build_parser():
    ap = argparse.ArgumentParser(prog="grsurf", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="tabulate invariants over a u grid")
    _add_surface_args(p)
    _add_family_args(p)
    p.add_argument("--u-range", type=grid_range, required=True)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("generate", help="generate a family meridian")
    p.add_argument("family", choices=["minimal", "pnmc", "flat", "flat_normal", "cmc"])
    _add_surface_args(p, meridian=False)
    _add_family_args(p)
    _add_ivp_args(p)
    p.add_argument("--u-range", type=grid_range, help="sample grid for closed-form families")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=["csv"], default="csv")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(verify.SUITES) + ["all"])
    p.add_argument("--h", type=decimal, default=verify.SuiteParams.h, help="RK4 step for ODE suites")
    p.add_argument("--seed", type=integer, default=verify.DEFAULT_SEED)
    p.add_argument("--out", help="JSON report path (default stdout)")
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("mesh", help="sample the surface on a (u, v) grid")
    _add_surface_args(p)
    _add_family_args(p)
    p.add_argument("--u-range", type=grid_range, required=True)
    p.add_argument("--v-range", type=grid_range, default=DEFAULT_V_RANGE,
                   help="default: 64 points over [0, 2pi)")
    p.add_argument("--projection", choices=list(PROJECTIONS), default="drop-x4")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=["csv", "obj"], default="csv")
    return ap


# -- helpers ---------------------------------------------------------------------------


def _closed_family(args):
    stype = SurfaceType.parse(args.stype)
    if args.family == "minimal":
        C = 0.0 if args.C is None else args.C
        return minimal_meridian(stype, MinimalParams(args.A, C, args.eps, args.alpha, args.beta))
    if args.C is None:
        raise UsageError("pnmc needs --C")
    return pnmc_meridian(stype, args.C, args.sign, args.alpha, args.beta, side=args.side)


def _meridian(args):
    sources = [args.f_src is not None, args.meridian_csv is not None, args.family is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one meridian source: --f, --meridian-csv or --family")
    if args.f_src is not None:
        return ClosedFormMeridian(args.f_src, args.g_src or "u")
    if args.g_src is not None:
        raise UsageError("--g only applies together with --f")
    if args.meridian_csv is not None:
        with open(args.meridian_csv, newline="") as fh:
            return SampledMeridian.from_csv(fh)
    return _closed_family(args)


def _spec(args):
    return SurfaceSpec(args.stype, args.alpha, args.beta, _meridian(args))


def _write(args, text):
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _safe_valid(spec, u):
    try:
        return validity(spec, u)
    except (GrsError, ValueError):
        return False


# -- commands ---------------------------------------------------------------------------


def cmd_invariants(args):
    spec = _spec(args)
    rows = [invariant_sample(spec, u) for u in args.u_range.points()]
    if not any(r.valid for r in rows):
        raise UsageError("no valid point on the requested u grid")
    if args.format == "json":
        out = []
        for r in rows:
            d = {"u": r.u, "valid": r.valid}
            d.update({k: (getattr(r, k) if r.valid else None) for k in InvariantSample.FIELDS})
            out.append(d)
        _write(args, json.dumps(out, indent=2) + "\n")
        return EXIT_OK
    buf = io.StringIO()
    buf.write(",".join(INVARIANT_HEADER) + "\n")
    for r in rows:
        if r.valid:
            cells = [fmt17(r.u), "1"] + [fmt17(getattr(r, k)) for k in InvariantSample.FIELDS]
        else:
            cells = [fmt17(r.u), "0"] + [""] * len(InvariantSample.FIELDS)
        buf.write(",".join(cells) + "\n")
    _write(args, buf.getvalue())
    return EXIT_OK


def cmd_generate(args):
    stype = SurfaceType.parse(args.stype)
    if args.family in ("minimal", "pnmc"):
        m = _closed_family(args)
        us = args.u_range.points() if args.u_range else m.domain.grid(CLOSED_FAMILY_SAMPLES)
        spec = SurfaceSpec(stype, args.alpha, args.beta, m)
        us = [u for u in us if u in m.domain and _safe_valid(spec, u)]
        if len(us) < 2:
            raise UsageError("fewer than 2 valid nodes on the requested grid")
        sampled = SampledMeridian.from_closed_form(m, us)
        _write(args, sampled.to_csv())
        return EXIT_OK
    if args.family == "cmc":
        if args.c is None:
            raise UsageError("cmc needs --c")
        sclass = SpecialClass.cmc(args.c)
    else:
        sclass = SpecialClass(args.family)
    cfg = IvpConfig(args.u0, args.f0, args.fp0, args.u_end, args.h)
    sampled = integrate_special(sclass, stype, args.alpha, args.beta, cfg)
    _write(args, sampled.to_csv())
    if sampled.truncated:
        last = float(sampled.u[-1] if cfg.u_end > cfg.u0 else sampled.u[0])
        print(f"grsurf: integration truncated at u={last!r}: {sampled.note}", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_verify(args):
    params = verify.SuiteParams(seed=args.seed, h=args.h)
    reports = verify.run_suite(args.suite, params)
    text = verify.reports_to_json(reports) + "\n"
    table = verify.format_table(reports) + "\n"
    if args.out:
        _write(args, text)
        sys.stdout.write(table)
    else:
        sys.stdout.write(text)
        sys.stderr.write(table)
    return EXIT_OK if verify.all_passed(reports) else EXIT_VERIFY_FAILED


def mesh_points(spec, us, vs):
    """``(rows, grid)``: valid u rows and the (n_u, n_v, 4) position array."""
    rows = [u for u in us if _safe_valid(spec, u)]
    grid = np.array([[position(spec, u, v) for v in vs] for u in rows]).reshape(len(rows), len(vs), 4)
    return rows, grid


def cmd_mesh(args):
    spec = _spec(args)
    vs = args.v_range.points()
    rows, grid = mesh_points(spec, args.u_range.points(), vs)
    if len(rows) < 2:
        raise UsageError("fewer than 2 valid u rows on the requested grid")
    buf = io.StringIO()
    if args.format == "csv":
        buf.write(",".join(MESH_HEADER) + "\n")
        for i, u in enumerate(rows):
            for j, v in enumerate(vs):
                buf.write(",".join(fmt17(x) for x in (u, v, *grid[i, j])) + "\n")
    else:
        keep = PROJECTIONS[args.projection]
        nu, nv = len(rows), len(vs)
        buf.write(f"# grsurf mesh type={spec.stype.name} projection={args.projection} grid={nu}x{nv}\n")
        for i in range(nu):
            for j in range(nv):
                p = grid[i, j]
                buf.write("v " + " ".join(fmt17(p[k]) for k in keep) + "\n")
        for i in range(nu - 1):
            for j in range(nv - 1):
                a = i * nv + j + 1
                b, c, d = a + 1, a + nv, a + nv + 1
                buf.write(f"f {a} {b} {d}\nf {a} {d} {c}\n")
    _write(args, buf.getvalue())
    return EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "mesh": cmd_mesh,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GrsError, ValueError, OSError) as exc:
        print(f"grsurf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
