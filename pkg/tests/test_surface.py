import math

import numpy as np
import pytest

from grsurf.errors import InvalidPointError
from grsurf.meridian import Interval, closed_form
from grsurf.minkowski import gram_matrix, minkowski_inner
from grsurf.surface import (
    SurfaceSpec,
    first_form,
    frame,
    position,
    position_jets,
    validity,
)
from grsurf.verify import SuiteParams, random_points


def test_validity_examples(unit_I):
    assert validity(unit_I, 0.0)
    lightlike = SurfaceSpec("I", 1.0, 1.0, closed_form("u", "u"))
    assert not validity(lightlike, 0.3)
    spec = SurfaceSpec("II", 1.0, 2.0, closed_form("1", "u"))
    assert not validity(spec, 0.25)
    assert validity(spec, 1.0)


def test_rates_must_be_positive():
    with pytest.raises(ValueError):
        SurfaceSpec("I", 0.0, 1.0, closed_form("1"))


def test_position_examples(unit_I, unit_II):
    assert np.array_equal(position(unit_I, 0.0, 0.0), [1, 0, 0, 0])
    assert np.array_equal(position(unit_I, 1.0, 0.0), [1, 0, 0, 1])
    spec2 = SurfaceSpec("II", 1.0, 1.0, closed_form("1", "u"))
    assert np.array_equal(position(spec2, 0.0, 0.0), [1, 0, 0, 0])


def test_first_form_examples(unit_I, unit_II):
    for u in (0.0, 0.7, -1.3):
        ff = first_form(unit_I, u)
        assert (ff.E, ff.F, ff.G) == (-1.0, 0.0, pytest.approx(1 + u * u))
    ff = first_form(unit_II, 1.0)
    assert (ff.E, ff.F, ff.G) == (1.0, 0.0, -3.0)


def test_frame_example(unit_I):
    fr = frame(unit_I, 0.0, 0.0)
    assert np.allclose(fr.n1, [0, 0, 1, 0], atol=1e-15)
    assert np.allclose(fr.n2, [1, 0, 0, 0], atol=1e-15)
    assert np.allclose(gram_matrix(fr.as_array()), np.diag([-1.0, 1, 1, 1]))


def test_frame_gram_type_II(unit_II):
    fr = frame(unit_II, 1.0, 0.4)
    assert np.allclose(gram_matrix(fr.as_array()), np.diag([1.0, -1, 1, 1]), atol=1e-12)


def test_invalid_point_raises():
    spec = SurfaceSpec("II", 1.0, 2.0, closed_form("1", "u"))
    with pytest.raises(InvalidPointError):
        frame(spec, 0.25, 0.0)


def test_position_jets_examples(unit_I):
    z_u, z_v, z_uu, z_uv, z_vv = position_jets(unit_I, 0.0, 0.0)
    assert np.array_equal(z_uu, np.zeros(4))
    assert np.array_equal(z_vv, [-1, 0, 0, 0])


@pytest.mark.parametrize("stype", ["I", "II"])
def test_position_jets_match_fd(stype):
    h = 1e-4
    for tm, u, v in random_points(SuiteParams(n_random=10), stype):
        s = tm.spec
        P = lambda a, b: position(s, a, b)  # noqa: E731
        z_u, z_v, z_uu, z_uv, z_vv = position_jets(s, u, v)
        fd = [
            (P(u + h, v) - P(u - h, v)) / (2 * h),
            (P(u, v + h) - P(u, v - h)) / (2 * h),
            (P(u + h, v) - 2 * P(u, v) + P(u - h, v)) / h**2,
            (P(u + h, v + h) - P(u + h, v - h) - P(u - h, v + h) + P(u - h, v - h)) / (4 * h * h),
            (P(u, v + h) - 2 * P(u, v) + P(u, v - h)) / h**2,
        ]
        for exact, approx in zip((z_u, z_v, z_uu, z_uv, z_vv), fd):
            assert np.allclose(exact, approx, atol=1e-5)


@pytest.mark.parametrize("stype", ["I", "II"])
def test_normals_are_normal(stype):
    for tm, u, v in random_points(SuiteParams(n_random=50), stype):
        fr = frame(tm.spec, u, v)
        z_u, z_v, *_ = position_jets(tm.spec, u, v)
        for n in (fr.n1, fr.n2):
            assert abs(minkowski_inner(z_u, n)) < 1e-10
            assert abs(minkowski_inner(z_v, n)) < 1e-10
