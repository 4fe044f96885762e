import os
import subprocess
import sys

import numpy as np
import pytest

from grsurf import _pykernels as py
from grsurf import kernels

cy = pytest.importorskip("grsurf._ckernels")

RK4_CASES = [
    (py.FLAT, 1, 1.0, 1.0, 0.0, 1.0, 0.5, 0.0, 2.0, 1e-3),
    (py.FLAT, 2, 1.0, 1.0, 0.0, 1.0, 0.5, 0.2, 2.0, 1e-3),
    (py.FLAT_NORMAL, 1, 1.2, 0.7, 0.0, 1.0, 0.5, 0.0, 2.0, 1e-3),
    (py.FLAT_NORMAL, 2, 1.0, 1.0, 0.0, 2.0, 0.5, 0.0, 1.0, 1e-3),
    (py.CMC, 1, 1.0, 1.0, 2.0, 1.0, 0.5, 0.0, 2.0, 1e-3),
    (py.CMC, 2, 1.0, 1.0, 2.0, 1.0, 0.5, 0.0, 2.0, 1e-3),
    (py.FLAT_NORMAL, 2, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 2.0, 1e-3),  # invalid start
]


@pytest.mark.parametrize("case", RK4_CASES)
def test_rk4_backends_agree_bitwise(case):
    a, b = py.rk4(*case), cy.rk4(*case)
    assert a[4] == b[4]
    for x, y in zip(a[:4], b[:4]):
        assert np.array_equal(x, y)


def test_rhs_backends_agree():
    rng = np.random.default_rng(1)
    for _ in range(500):
        kind = int(rng.integers(3))
        st = int(rng.integers(1, 3))
        args = (kind, st, *rng.uniform(0.3, 2, 2), rng.uniform(-2, 2), *rng.uniform(-2, 2, 3))
        assert py.rhs(*args) == cy.rhs(*args)


def test_hermite_backends_agree():
    xs = np.linspace(0, 1, 33)
    ys, ds, d2s = np.sin(3 * xs), 3 * np.cos(3 * xs), -9 * np.sin(3 * xs)
    x = np.random.default_rng(2).uniform(0, 1, 1000)
    x[:5] = xs[:5]
    for p, q in zip(py.hermite_eval(xs, ys, ds, d2s, x), cy.hermite_eval(xs, ys, ds, d2s, x)):
        assert np.allclose(p, q, rtol=0, atol=1e-14)


def test_status_codes_and_truncation():
    u, f, fp, fpp, st = kernels.rk4(*RK4_CASES[0])
    assert st == kernels.GUARD_FLAT and u[-1] < 1.39
    u, *_, st = kernels.rk4(*RK4_CASES[-1])
    assert st == kernels.GUARD_G and u.size == 0
    assert set(kernels.STATUS_NAMES) == {0, 1, 2, 3, 4, 5}


def test_sign_change_guard_catches_stepping_over_singularity():
    # with a huge step the flat denominator jumps from positive to negative
    st, _ = py.rhs(py.FLAT, 1, 1.0, 1.0, 0.0, 2.0, 1.0, -0.6, 1.0)
    assert st == py.GUARD_FLAT
    st, _ = py.rhs(py.FLAT, 1, 1.0, 1.0, 0.0, 2.0, 1.0, -0.6)
    assert st == py.OK


def test_pure_python_switch():
    env = dict(os.environ, GRSURF_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from grsurf import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND == "cython"
