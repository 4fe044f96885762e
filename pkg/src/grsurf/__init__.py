"""Timelike general rotational surfaces in Minkowski 4-space.

Compute the invariants of a surface from its meridian, generate the special
classes (flat, flat normal connection, minimal, CMC, PNMC) and verify them
numerically.
"""
from .errors import (
    DomainError,
    FrameError,
    GrsError,
    InvalidPointError,
    ParseError,
    SingularityError,
)
from .families import (
    IvpConfig,
    MinimalParams,
    SpecialClass,
    class_residual,
    integrate_special,
    minimal_meridian,
    ode_rhs,
    pnmc_meridian,
)
from .invariants import (
    InvariantSample,
    commutator_coefficient,
    delta_invariants,
    frenet_coeffs,
    gauss_curvature,
    gauss_curvature_from_sigma,
    invariant_sample,
    mean_curvature,
    normal_connection_coeffs,
    normal_curvature,
    second_form_coeffs,
)
from .jet import Jet2
from .meridian import ClosedFormMeridian, Interval, SampledMeridian, closed_form, eval_jet
from .minkowski import causal_character, minkowski_inner
from .surface import SurfaceSpec, SurfaceType, first_form, frame, position, validity
from .verify import CheckReport, fd_convergence, run_suite

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
