"""Command-line surface: dispatch, exit codes, determinism, artifacts."""

import json
from pathlib import Path

import pytest

from z22field.cli import build_parser, build_sim_config, main


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["frobnicate"])
    assert exc.value.code == 2


def test_bad_potential_spec_exits_two(capsys):
    rc = main(["check-potential", "--potential", "tan"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_verify_tables_passes(capsys):
    rc = main(["verify-tables", "--format", "json"])
    out = capsys.readouterr().out
    assert rc == 0
    assert json.loads(out)["ok"] is True


def test_json_output_is_deterministic(capsys):
    main(["verify-tables", "--format", "json"])
    first = capsys.readouterr().out
    main(["verify-tables", "--format", "json"])
    second = capsys.readouterr().out
    assert first == second


def test_derive_lagrangian_latex(capsys):
    rc = main(["derive-lagrangian", "--potential", "cos",
               "--eliminate-aux", "--format", "latex"])
    out = capsys.readouterr().out
    assert rc == 0
    assert r"\alpha" in out and r"\cos" in out
    assert "A_{00}" not in out  # eliminated


def test_derive_lagrangian_generic_json(capsys):
    rc = main(["derive-lagrangian", "--generic", "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["ok"] is True
    assert data["report"]["potential"] == "abstract"


def test_check_potential_csv(capsys):
    rc = main(["check-potential", "--potential", "cos", "--format", "csv"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "check,value"
    assert lines[-1] == "ok,True"


def test_simulate_stdout_csv(capsys):
    rc = main(["simulate", "--alpha", "1", "--dx", "0.2", "--t-end", "1",
               "--initial", "kink"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "time,energy"
    assert len(lines) == 2 + round(1.0 / (0.4 * 0.2))
    t0, e0 = lines[1].split(",")
    assert float(t0) == 0.0
    assert abs(float(e0) - 2.0) < 5e-2


def test_simulate_cfl_violation_exits_two(capsys):
    rc = main(["simulate", "--dx", "0.1", "--dt", "0.5", "--t-end", "1"])
    assert rc == 2


def test_simulate_artifacts(tmp_path, capsys):
    rc = main(["simulate", "--dx", "0.2", "--t-end", "1", "--initial",
               "kink", "--param", "v=0.2", "--output-stride", "5",
               "--profile-dump", "--out", str(tmp_path)])
    assert rc == 0
    assert (tmp_path / "trajectory.csv").exists()
    assert (tmp_path / "profile.dat").exists()
    snaps = sorted(tmp_path.glob("snapshot_*.csv"))
    assert snaps
    header = snaps[0].read_text().splitlines()[0]
    assert header == "x,phi00,phi11,pi00,pi11"


def test_simulate_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("alpha = 1\ndx = 0.2\nt-end = 1\ninitial = kink\n"
                   "param.v = 0.25\n# comment\n")
    rc = main(["simulate", "--config", str(cfg), "--out", str(tmp_path)])
    assert rc == 0
    body = (tmp_path / "trajectory.csv").read_text()
    capsys.readouterr()

    parsed = build_sim_config(build_parser().parse_args(
        ["simulate", "--config", str(cfg)]))
    assert parsed.params == {"v": 0.25}
    assert parsed.dt == pytest.approx(0.08)
    assert body.startswith("time,energy")


def test_config_flags_override_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("alpha = 2\ndx = 0.2\n")
    parsed = build_sim_config(build_parser().parse_args(
        ["simulate", "--config", str(cfg), "--alpha", "3"]))
    assert parsed.alpha == 3.0
    assert parsed.dx == 0.2


def test_report_all_writes_manifest(tmp_path, capsys):
    rc = main(["report-all", "--out", str(tmp_path)])
    assert rc == 0
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    names = [row["check"] for row in manifest]
    assert names == ["verify-algebra", "verify-tables", "derive-lagrangian",
                     "check-potential", "check-currents", "verify-dmodule",
                     "check-examples", "numerics"]
    for row in manifest:
        assert row["status"] == "pass"
        artifact = Path(row["artifact"])
        assert artifact.exists()
        assert json.loads(artifact.read_text())["ok"] is True
