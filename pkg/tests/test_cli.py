"""CLI contract: schemas, determinism, exit codes, JSON mirrors."""

import csv
import json
import math

import numpy as np
import pytest

from mirroratom import (AtomParams, BoundaryCondition, MirrorConfig, MotionAxis,
                        dissipation_kernel, ratio_to_free, static_rate)
from mirroratom.cli import main

D = BoundaryCondition.DIRICHLET
PAR, PERP = MotionAxis.PARALLEL, MotionAxis.PERPENDICULAR


def read_csv(path):
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    return rows[0], rows[1:]


def test_ratio_schema_and_values(tmp_path):
    out = tmp_path / "ratio.csv"
    assert main(["ratio", "--bc", "dirichlet", "--axis", "par",
                 "--x-min", "0.01", "--x-max", "20", "--points", "50",
                 "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["x", "ratio"]
    assert len(rows) == 50
    xs = np.array([float(r[0]) for r in rows])
    vals = np.array([float(r[1]) for r in rows])
    assert xs[0] == pytest.approx(0.01) and xs[-1] == pytest.approx(20.0)
    assert np.allclose(vals, ratio_to_free(D, PAR, xs), rtol=1e-12)
    first = out.read_text()
    assert first.startswith("# mirroratom ratio ")


def test_ratio_near_origin_behavior(tmp_path):
    # D: perp starts at 2, par at 0; both head towards 1
    for axis, start in (("par", 0.0), ("perp", 2.0)):
        out = tmp_path / f"r_{axis}.csv"
        assert main(["ratio", "--bc", "d", "--axis", axis,
                     "--x-min", "1e-4", "--x-max", "1e3", "--points", "40",
                     "--out", str(out)]) == 0
        _, rows = read_csv(out)
        vals = [float(r[1]) for r in rows]
        assert vals[0] == pytest.approx(start, abs=1e-6)
        assert vals[-1] == pytest.approx(1.0, abs=1e-2)


def test_ratio_single_point_and_linear(tmp_path):
    out = tmp_path / "one.csv"
    assert main(["ratio", "--bc", "neumann", "--axis", "perp", "--points", "1",
                 "--x-min", "0.5", "--x-max", "9", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert len(rows) == 1 and float(rows[0][0]) == pytest.approx(0.5)
    lin = tmp_path / "lin.csv"
    assert main(["ratio", "--bc", "n", "--axis", "perp", "--linear",
                 "--x-min", "0", "--x-max", "1", "--points", "3",
                 "--out", str(lin)]) == 0
    _, rows = read_csv(lin)
    assert [float(r[0]) for r in rows] == pytest.approx([0.0, 0.5, 1.0])


def test_ratio_usage_errors(tmp_path):
    # log spacing needs x-min > 0
    assert main(["ratio", "--bc", "d", "--axis", "par", "--x-min", "0",
                 "--out", str(tmp_path / "x.csv")]) == 2
    # unknown flag and missing required flag exit 2 via argparse
    assert main(["ratio", "--bogus", "1"]) == 2
    assert main(["ratio", "--bc", "d"]) == 2
    assert main(["ratio", "--bc", "dirich let", "--axis", "par"]) == 2


def test_determinism_byte_identical(tmp_path):
    args = ["angular", "--bc", "dirichlet", "--axis", "par", "--ka", "2.5",
            "--theta-points", "41", "--phi-points", "16"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_angular_grid_and_perp_axisymmetry(tmp_path):
    out = tmp_path / "ang.csv"
    assert main(["angular", "--bc", "d", "--axis", "par", "--ka", "0.001",
                 "--theta-points", "91", "--phi-points", "8",
                 "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["theta", "phi", "p"]
    assert len(rows) == 91 * 8

    perp = tmp_path / "perp.csv"
    assert main(["angular", "--bc", "d", "--axis", "perp", "--ka", "2.5",
                 "--theta-points", "91", "--phi-points", "64",
                 "--out", str(perp)]) == 0
    _, rows = read_csv(perp)
    assert len(rows) == 91  # extra phi points ignored for the axisymmetric case
    assert all(float(r[1]) == 0.0 for r in rows)


def test_angular_usage_errors(tmp_path):
    assert main(["angular", "--bc", "d", "--axis", "par", "--ka", "-1",
                 "--out", str(tmp_path / "x.csv")]) == 2


def test_verify_default_passes_and_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    code = main(["verify", "--x-grid", "0.01:20:7", "--report", str(report)])
    out = capsys.readouterr().out
    assert code == 0
    assert "28/28 checks passed" in out
    assert "measured_ratio_to_imgamma" in out
    assert "note:" in out  # the convention discrepancy is documented
    entries = json.loads(report.read_text())
    assert isinstance(entries, list) and len(entries) == 28
    for key in ("bc", "axis", "x", "closed_form", "quadrature", "rel_error",
                "passed", "measured_ratio_to_imgamma"):
        assert key in entries[0]
    assert all(e["passed"] for e in entries)
    assert all(abs(e["measured_ratio_to_imgamma"] - 1.0) < 1e-8 for e in entries)


def test_verify_channel_subset(capsys):
    code = main(["verify", "--x-grid", "0.5:2:2", "--channels", "D-par"])
    out = capsys.readouterr().out
    assert code == 0
    assert "2/2 checks passed" in out
    assert "N-" not in out.split("note:")[0]


def test_verify_unachievable_tolerance_exits_one(capsys):
    code = main(["verify", "--x-grid", "0.01:20:7", "--tol", "1e-15"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out


def test_verify_usage_errors(capsys):
    assert main(["verify", "--x-grid", "nonsense"]) == 2
    assert main(["verify", "--x-grid", "0:1:5"]) == 2
    assert main(["verify", "--channels", "D-diagonal"]) == 2
    capsys.readouterr()


def test_decay_monochromatic_reference(tmp_path):
    out = tmp_path / "decay.csv"
    assert main(["decay", "--bc", "dirichlet", "--mono", "--axis", "par",
                 "--epsilon", "0.01", "--omega-cm", "2.0", "--window-T", "100",
                 "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["kind", "nu", "value"]
    table = {r[0]: r for r in rows if r[0] != "line"}
    rate = float(table["rate"][2])
    prob = float(table["probability"][2])
    assert rate == pytest.approx(2.3004742059574046e-07, rel=1e-10)
    assert prob == pytest.approx(rate * 100.0, rel=1e-12)
    line_rows = [r for r in rows if r[0] == "line"]
    assert [float(r[1]) for r in line_rows] == [-2.0, 2.0]
    assert sum(float(r[2]) for r in line_rows) == pytest.approx(prob, rel=1e-10)


def test_decay_threshold_zero(tmp_path):
    out = tmp_path / "zero.csv"
    assert main(["decay", "--bc", "n", "--mono", "--axis", "perp",
                 "--epsilon", "0.01", "--omega-cm", "0.5", "--window-T", "10",
                 "--out", str(out)]) == 0
    _, rows = read_csv(out)
    table = {r[0]: r for r in rows if r[0] != "line"}
    assert float(table["probability"][2]) == 0.0


def test_decay_im_gamma_factor(tmp_path):
    args = ["decay", "--bc", "d", "--mono", "--axis", "par", "--epsilon", "0.01",
            "--omega-cm", "2.0", "--window-T", "50"]
    one, two = tmp_path / "one.csv", tmp_path / "two.csv"
    assert main(args + ["--out", str(one)]) == 0
    assert main(args + ["--im-gamma-factor", "2", "--out", str(two)]) == 0
    p1 = float(read_csv(one)[1][0][2])
    p2 = float(read_csv(two)[1][0][2])
    assert p2 == pytest.approx(2 * p1, rel=1e-12)


def test_decay_from_files(tmp_path):
    mono = tmp_path / "mono.json"
    mono.write_text(json.dumps({"axis": "par", "epsilon": 0.01,
                                "omega_cm": 2.0, "T": 100.0}))
    out = tmp_path / "from_json.csv"
    assert main(["decay", "--bc", "d", "--traj", str(mono),
                 "--out", str(out)]) == 0
    _, rows = read_csv(out)
    rate = float([r for r in rows if r[0] == "rate"][0][2])
    assert rate == pytest.approx(2.3004742059574046e-07, rel=1e-10)

    # sampled CSV path: integer periods reproduce the line rate
    period = 2 * math.pi / 2.0
    dt = period / 64
    n = int(round(32 * period / dt))
    t = np.arange(n) * dt
    y = 0.01 * np.cos(2.0 * t)
    traj = tmp_path / "traj.csv"
    traj.write_text("t,y\n" + "\n".join(
        f"{float(ti)!r},{float(yi)!r}" for ti, yi in zip(t, y)) + "\n")
    out2 = tmp_path / "from_csv.csv"
    assert main(["decay", "--bc", "d", "--traj", str(traj), "--axis", "par",
                 "--out", str(out2)]) == 0
    _, rows2 = read_csv(out2)
    rate2 = float([r for r in rows2 if r[0] == "rate"][0][2])
    assert rate2 == pytest.approx(2.3004742059574046e-07, rel=1e-9)


def test_decay_usage_errors(tmp_path):
    assert main(["decay", "--bc", "d"]) == 2  # neither --traj nor --mono
    assert main(["decay", "--bc", "d", "--mono"]) == 2  # missing mono flags
    assert main(["decay", "--bc", "d", "--traj", str(tmp_path / "none.csv")]) == 2


def test_spectrum_line_cases(tmp_path):
    # omega_cm < omega: three lines
    out = tmp_path / "three.csv"
    assert main(["spectrum", "--bc", "dirichlet", "--axis", "par",
                 "--epsilon", "0.01", "--omega-cm", "0.5",
                 "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["omega", "rate", "origin"]
    assert [r[2] for r in rows] == ["sideband_minus", "static", "sideband_plus"]
    assert [float(r[0]) for r in rows] == pytest.approx([0.5, 1.0, 1.5])
    static = float(rows[1][1])
    assert static == pytest.approx(static_rate(D, AtomParams(), MirrorConfig()),
                                   rel=1e-12)

    # omega_cm > omega: two lines
    out2 = tmp_path / "two.csv"
    assert main(["spectrum", "--bc", "d", "--axis", "par", "--epsilon", "0.01",
                 "--omega-cm", "3.0", "--out", str(out2)]) == 0
    _, rows2 = read_csv(out2)
    assert [r[2] for r in rows2] == ["static", "sideband_plus"]

    # epsilon = 0: single static line
    out3 = tmp_path / "one.csv"
    assert main(["spectrum", "--bc", "d", "--axis", "par", "--epsilon", "0",
                 "--omega-cm", "0.5", "--out", str(out3)]) == 0
    _, rows3 = read_csv(out3)
    assert [r[2] for r in rows3] == ["static"]


def test_json_format(tmp_path):
    out = tmp_path / "ratio.json"
    assert main(["ratio", "--bc", "d", "--axis", "par", "--points", "3",
                 "--format", "json", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["params"]["bc"] == "dirichlet"
    assert len(data["rows"]) == 3
    assert set(data["rows"][0]) == {"x", "ratio"}

    spec = tmp_path / "spec.json"
    assert main(["spectrum", "--bc", "d", "--axis", "par", "--epsilon", "0.01",
                 "--omega-cm", "0.5", "--format", "json", "--out", str(spec)]) == 0
    sdata = json.loads(spec.read_text())
    assert "total_rate" in sdata
    assert [r["origin"] for r in sdata["rows"]] == [
        "sideband_minus", "static", "sideband_plus"]

    dec = tmp_path / "dec.json"
    assert main(["decay", "--bc", "d", "--mono", "--axis", "par",
                 "--epsilon", "0.01", "--omega-cm", "2.0", "--window-T", "10",
                 "--format", "json", "--out", str(dec)]) == 0
    ddata = json.loads(dec.read_text())
    assert {"probability", "rate", "lines"} <= set(ddata)


def test_float_format_is_fixed_12e(tmp_path):
    out = tmp_path / "fmt.csv"
    assert main(["ratio", "--bc", "d", "--axis", "perp", "--points", "2",
                 "--x-min", "1", "--x-max", "2", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    for row in rows:
        for cell in row:
            mantissa, exponent = cell.split("e")
            assert len(mantissa.split(".")[1]) == 12
            assert len(exponent) == 3  # sign + 2 digits
