import csv
import io
import json
import math

import pytest

from grsurf.cli import INVARIANT_HEADER, main


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_invariants_reference_row(capsys):
    code, out, _ = run(["invariants", "--type", "I", "--f", "1", "--g", "u", "--u-range=-1:1:3"], capsys)
    assert code == 0
    assert out.splitlines()[0] == ",".join(INVARIANT_HEADER)
    row = rows_of(out)[1]
    assert float(row["u"]) == 0.0 and row["valid"] == "1"
    assert float(row["K"]) == pytest.approx(1.0)
    assert float(row["H2"]) == pytest.approx(-0.5)
    assert float(row["kappa"]) == pytest.approx(-1.0)


def test_invalid_rows_are_blank(capsys):
    code, out, _ = run(
        ["invariants", "--type", "II", "--beta", "2", "--f", "1", "--u-range", "0:1:5"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "0,0" + "," * 16
    assert rows_of(out)[-1]["valid"] == "1"


def test_pnmc_family_hnorm2_column(capsys):
    code, out, _ = run(["invariants", "--family", "pnmc", "--C", "1", "--u-range=-2:2:21"], capsys)
    assert code == 0
    for r in rows_of(out):
        assert float(r["Hnorm2"]) == pytest.approx(1.0, abs=1e-8)


def test_minimal_family_hnorm2_column(capsys):
    code, out, _ = run(
        ["invariants", "--family", "minimal", "--A", "1", "--C", "0.785398", "--u-range=-2:2:41"], capsys)
    assert code == 0
    assert max(float(r["Hnorm2"]) for r in rows_of(out)) <= 1e-16


def test_json_format(capsys):
    code, out, _ = run(["invariants", "--f", "1", "--u-range", "0:1:2", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data[0]["valid"] is True and data[0]["K"] == pytest.approx(1.0)


def test_generate_minimal_round_trip(tmp_path, capsys):
    path = tmp_path / "m.csv"
    code, _, _ = run(["generate", "minimal", "--type", "I", "--A", "1", "--C", "0.785398", "--eps", "1",
                      "--u-range=-2:2:8001", "--out", str(path)], capsys)
    assert code == 0
    code, out, _ = run(["invariants", "--meridian-csv", str(path), "--u-range=-1.9:1.9:77"], capsys)
    assert code == 0
    sampled = rows_of(out)
    code, out, _ = run(["invariants", "--family", "minimal", "--A", "1", "--C", "0.785398",
                        "--u-range=-1.9:1.9:77"], capsys)
    closed = rows_of(out)
    for a, b in zip(sampled, closed):
        assert float(a["K"]) == pytest.approx(float(b["K"]), abs=1e-6)
    # the nodes themselves carry exact jets: still minimal
    code, out, _ = run(["invariants", "--meridian-csv", str(path), "--u-range=-2:2:401"], capsys)
    assert max(abs(float(r["H2"])) for r in rows_of(out) if r["valid"] == "1") < 1e-8


def test_generate_pnmc_domain(capsys):
    code, out, _ = run(["generate", "pnmc", "--type", "II", "--C", "1"], capsys)
    assert code == 0
    us = [float(r["u"]) for r in rows_of(out)]
    assert 1 / math.sqrt(2) < us[0] < us[-1] < 1.0


def test_generate_flat_truncates_at_singularity(tmp_path, capsys):
    path = tmp_path / "f.csv"
    code, _, err = run(["generate", "flat", "--type", "I", "--u0", "1", "--f0", "0.5", "--fp0", "0",
                        "--u-end", "2", "--h", "1e-3", "--out", str(path)], capsys)
    assert code == 3
    assert "truncated" in err
    assert path.read_text().startswith("u,f,fp,fpp,g,gp,gpp\n")


def test_generate_flat_full_span(tmp_path, capsys):
    path = tmp_path / "f.csv"
    code, _, _ = run(["generate", "flat", "--type", "I", "--u0", "1", "--f0", "0.5", "--fp0", "0",
                      "--u-end", "1.3", "--h", "1e-3", "--out", str(path)], capsys)
    assert code == 0
    code, out, _ = run(["invariants", "--meridian-csv", str(path), "--u-range", "1.0005:1.2995:300"], capsys)
    assert max(abs(float(r["K"])) for r in rows_of(out)) < 1e-6


def test_generate_cmc_needs_constant(capsys):
    code, _, err = run(["generate", "cmc", "--type", "I"], capsys)
    assert code == 2 and "--c" in err


def test_verify_minimal_json(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(["verify", "minimal", "--out", str(path)], capsys)
    assert code == 0
    data = json.loads(path.read_text())
    assert all(r["passed"] for r in data)
    assert max(r["max_abs_residual"] for r in data) < 1e-8
    assert "checks passed" in out


def test_verify_coarse_flat_fails(capsys):
    code, out, _ = run(["verify", "flat", "--h", "1e-2"], capsys)
    assert code == 1
    fine_code, fine_out, _ = run(["verify", "flat", "--h", "1e-3"], capsys)
    assert fine_code == 0
    coarse = {r["check_name"]: r["max_abs_residual"] for r in json.loads(out)}
    fine = {r["check_name"]: r["max_abs_residual"] for r in json.loads(fine_out)}
    assert coarse["flat_K_I"] > fine["flat_K_I"]


def test_verify_unknown_suite(capsys):
    assert run(["verify", "bogus"], capsys)[0] == 2


def test_mesh_obj_topology(capsys):
    code, out, _ = run(["mesh", "--f", "1", "--g", "u", "--u-range", "0:1:3", "--v-range", "0:1:3",
                        "--format", "obj"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert sum(line.startswith("v ") for line in lines) == 9
    faces = [line for line in lines if line.startswith("f ")]
    assert len(faces) == 8 and faces[0] == "f 1 2 5"


@pytest.mark.parametrize("stype", ["I", "II"])
def test_mesh_csv_coordinates(stype, capsys):
    f, g = "1+0.2*sin(u)", "u+2"
    code, out, _ = run(["mesh", "--type", stype, "--f", f, "--g", g, "--u-range", "0:1:5",
                        "--v-range", "0:2:7"], capsys)
    assert code == 0
    rows = rows_of(out)
    assert len(rows) == 35 and list(rows[0]) == ["u", "v", "x1", "x2", "x3", "x4"]
    for r in rows:
        u = float(r["u"])
        x1, x2, x3, x4 = (float(r[k]) for k in ("x1", "x2", "x3", "x4"))
        assert x1**2 + x2**2 == pytest.approx((1 + 0.2 * math.sin(u)) ** 2, abs=1e-12)
        if stype == "I":
            assert x4**2 - x3**2 == pytest.approx((u + 2) ** 2, abs=1e-12)


def test_mesh_default_v_range_and_projection(capsys):
    code, out, _ = run(["mesh", "--f", "1", "--u-range", "0:1:2", "--format", "obj",
                        "--projection", "drop-x1"], capsys)
    assert code == 0
    assert "grid=2x64" in out.splitlines()[0]
    assert out.count("\nv ") == 128


def test_outputs_byte_stable(tmp_path, capsys):
    outs = []
    for k in range(2):
        paths = [tmp_path / f"a{k}.obj", tmp_path / f"a{k}.csv", tmp_path / f"i{k}.csv"]
        run(["mesh", "--f", "2+0.3*sin(u)", "--u-range", "0:1:4", "--format", "obj", "--out", str(paths[0])], capsys)
        run(["mesh", "--f", "2+0.3*sin(u)", "--u-range", "0:1:4", "--out", str(paths[1])], capsys)
        run(["invariants", "--f", "2+0.3*sin(u)", "--u-range", "0:1:4", "--out", str(paths[2])], capsys)
        outs.append([p.read_bytes() for p in paths])
    assert outs[0] == outs[1]


@pytest.mark.parametrize(
    "args",
    [
        ["invariants", "--f", "1", "--alpha", "1+1", "--u-range", "0:1:3"],
        ["invariants", "--f", "1", "--alpha", "nan", "--u-range", "0:1:3"],
        ["invariants", "--f", "1", "--u-range", "1:0:3"],
        ["invariants", "--f", "1", "--u-range", "0:1:1"],
        ["invariants", "--u-range", "0:1:3"],
        ["invariants", "--f", "sin(u", "--u-range", "0:1:3"],
        ["invariants", "--type", "II", "--f", "1", "--u-range", "0:0.5:3"],
        ["mesh", "--f", "u", "--u-range", "0:1:3"],
        ["generate", "flat_normal", "--type", "II", "--u0", "1", "--f0", "1"],
    ],
)
def test_usage_errors_exit_2(args, capsys):
    assert run(args, capsys)[0] == 2
