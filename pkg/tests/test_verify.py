import json
import math

import pytest

from grsurf.families import MinimalParams, minimal_meridian
from grsurf.surface import SurfaceSpec
from grsurf.verify import (
    SUITES,
    CheckReport,
    SuiteParams,
    all_passed,
    fd_convergence,
    format_table,
    reports_to_json,
    run_suite,
)


@pytest.mark.parametrize("name", SUITES)
def test_each_suite_passes(name):
    reports = run_suite(name)
    assert reports
    failed = [r for r in reports if not r.passed]
    assert not failed, failed


def test_minimal_suite_residuals():
    reports = run_suite("minimal")
    for r in reports:
        if not r.check_name.startswith("negative_control"):
            assert r.max_abs_residual < 1e-8


def test_frames_suite_uses_seed_and_100_points():
    for r in run_suite("frames"):
        assert r.n_points in (100, 300)
        assert "seed=0x5EED" in r.notes
        if r.check_name.startswith("frame_gram"):
            assert r.max_abs_residual < 1e-10


def test_reproducible():
    a = reports_to_json(run_suite("oracles"))
    b = reports_to_json(run_suite("oracles"))
    assert a == b


def test_seed_changes_points():
    a = run_suite("frames", SuiteParams(seed=1))
    b = run_suite("frames", SuiteParams(seed=2))
    assert [r.max_abs_residual for r in a] != [r.max_abs_residual for r in b]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_structural_ratios_in_band():
    for r in run_suite("structural"):
        if r.check_name.endswith("_ratio"):
            assert r.tolerance == 0.5 and r.passed


def test_coarse_flat_step_gives_larger_residual():
    fine = {r.check_name: r for r in run_suite("flat", SuiteParams(h=1e-3))}
    coarse = {r.check_name: r for r in run_suite("flat", SuiteParams(h=1e-2))}
    assert coarse["flat_K_I"].max_abs_residual > fine["flat_K_I"].max_abs_residual


def test_report_invariant():
    r = CheckReport.make("x", [1e-3, -2e-3], 1e-3)
    assert r.max_abs_residual == 2e-3 and not r.passed
    r = CheckReport.make("x", [math.nan], 1.0)
    assert not r.passed
    r = CheckReport.away_from_zero("neg", [1.0], 0.1)
    assert r.passed and r.max_abs_residual == 0.0
    r = CheckReport.away_from_zero("neg", [0.01], 0.1)
    assert not r.passed


def test_json_and_table():
    reports = run_suite("pnmc")
    rows = json.loads(reports_to_json(reports))
    assert set(rows[0]) == {"check_name", "n_points", "max_abs_residual", "tolerance", "passed", "notes"}
    assert len(rows) == len(reports)
    table = format_table(reports)
    assert table.splitlines()[-1] == f"{len(reports)}/{len(reports)} checks passed"
    assert all_passed(reports)


def test_fd_convergence_examples():
    r = fd_convergence("ad_fd:sqrt(u^2+1)", [1e-2, 5e-3, 2.5e-3])
    assert abs(r.order - 2.0) <= 0.2
    assert len(r.pairs()) == 3
    p = MinimalParams(1.5, 0.3, 1, 1.3, 0.7)
    s = SurfaceSpec("I", p.alpha, p.beta, minimal_meridian("I", p))
    pts = s.meridian.domain.shrink(0.1).grid(11)
    r = fd_convergence("x_gamma", [1e-2, 5e-3, 2.5e-3], s, pts)
    assert abs(r.order - 2.0) <= 0.2
    r = fd_convergence("ad_fd:u^2", [1e-2, 5e-3, 2.5e-3])
    assert r.order is None and "skipped" in r.note


@pytest.mark.parametrize("hs", [[1e-2, 5e-3], [1e-2, 1e-2, 5e-3], [1e-3, 5e-3, 1e-2], [1e-2, 0.0, -1e-3]])
def test_fd_convergence_degenerate(hs):
    with pytest.raises(ValueError):
        fd_convergence("ad_fd:sin(u)", hs)
