"""Command-line entry point, exercised through main(argv)."""

import json

import pytest

import _frozen as fz
from pointspec.cli import main
from pointspec.report import ROOTS_HEADER, SWEEP_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- solve


def test_solve_free_matches_closed_form(capsys):
    code, out, err = run(
        capsys, "solve", "--model", "free", "--a", "1.0", "--b", "0.0"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == ROOTS_HEADER
    assert len(lines) == 2
    idx, re_e, im_e, res, kind = lines[1].split(",")
    assert idx == "0"
    assert abs(float(re_e) + 0.25) < 1e-12
    assert float(im_e) == 0.0
    assert float(res) < 1e-10
    assert kind == "bound"


def test_solve_above_threshold_header_only(capsys):
    code, out, err = run(
        capsys,
        "solve", "--model", "harmonic", "--k", "1.0", "--a", "1.0", "--b", "2.0",
        "--e-min", "-2.0", "--e-max", "5.0",
    )
    assert code == 0
    assert out == ROOTS_HEADER + "\n"


def test_solve_json_format(capsys):
    code, out, err = run(
        capsys, "solve", "--model", "free", "--a", "2.0", "--b", "1.0",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc) == 1
    root = doc[0]
    want = -16.0 / 25.0
    assert abs(root["re_energy"] - want) < 1e-12
    assert root["kind"] == "bound"


def test_solve_output_file_and_stdout_dash(capsys, tmp_path):
    target = tmp_path / "roots.csv"
    code, _, _ = run(
        capsys, "solve", "--model", "free", "--a", "1.0", "--output", str(target)
    )
    assert code == 0
    code2, out2, _ = run(
        capsys, "solve", "--model", "free", "--a", "1.0", "--output", "-"
    )
    assert code2 == 0
    assert target.read_text() == out2


def test_solve_degenerate_well_is_usage_error(capsys):
    code, out, err = run(
        capsys, "solve", "--model", "well", "--c", "1.0", "--a", "0.0", "--b", "1.0"
    )
    assert code == 1
    assert "error:" in err
    assert out == ""


def test_solve_window_must_be_complete(capsys):
    code, _, err = run(
        capsys, "solve", "--model", "free", "--a", "1.0", "--e-min", "-2.0"
    )
    assert code == 1
    assert "error:" in err


def test_missing_model_is_usage_error(capsys):
    code, _, err = run(capsys, "solve", "--a", "1.0")
    assert code == 1


def test_unknown_subcommand_exits_one(capsys):
    assert main(["dance"]) == 1
    capsys.readouterr()


# ---------------------------------------------------- scalar subcommands


def test_threshold_value(capsys):
    code, out, _ = run(capsys, "threshold", "--k", "4.0", "--a", "3.0")
    assert code == 0
    assert abs(float(out.strip()) - 0.75) < 1e-15


def test_window_matches_frozen(capsys):
    code, out, _ = run(capsys, "window", "--c", "1.0", "--a", "1.0")
    assert code == 0
    lo, hi = map(float, out.split())
    assert abs(lo - fz.WINDOW_B_LO) < 1e-13
    assert abs(hi - fz.WINDOW_B_HI) < 1e-13


def test_resonances_csv(capsys):
    code, out, _ = run(
        capsys,
        "resonances", "--k", "1.0", "--a", "1.0", "--b", "2.0", "--pairs", "2",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == ROOTS_HEADER
    assert len(lines) == 5
    uppers = [l for l in lines[1:] if float(l.split(",")[2]) > 0.0]
    want = fz.RESONANCES_K1_A1_B2[0]
    got = complex(float(uppers[0].split(",")[1]), float(uppers[0].split(",")[2]))
    assert abs(got - want) < 1e-12 * abs(want)
    for line in lines[1:]:
        assert line.split(",")[4] == "resonance"


def test_resonances_below_threshold_fails(capsys):
    code, _, err = run(
        capsys, "resonances", "--k", "1.0", "--a", "2.0", "--b", "0.1"
    )
    assert code == 1
    assert "error:" in err


# ---------------------------------------------------------------- sweep


def test_sweep_csv_shape(capsys):
    code, out, _ = run(
        capsys,
        "sweep", "--model", "free", "--a", "1.0", "--b", "0.0",
        "--vary", "a", "--vary-from", "0.9", "--vary-to", "1.1",
        "--vary-count", "21", "--e-min", "-1.5", "--e-max=-1e-6",
        "--step", "0.002",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 22
    for line in lines[1:]:
        param, branch, re_e, im_e = line.split(",")
        want = -float(param) ** 2 / 4.0
        assert abs(float(re_e) - want) < 1e-6
        assert branch == "0"


def test_sweep_needs_matching_model(capsys):
    code, _, err = run(
        capsys,
        "sweep", "--model", "free", "--a", "1.0", "--vary", "F",
        "--vary-from", "0.1", "--vary-to", "0.2", "--vary-count", "3",
    )
    assert code == 1
    assert "error:" in err


# --------------------------------------------------------------- oracle


def test_oracle_pass_and_report(capsys, tmp_path):
    target = tmp_path / "oracle.json"
    code, out, err = run(
        capsys,
        "oracle", "--model", "harmonic", "--k", "1.0",
        "--e-from", "-2.0", "--e-to", "-0.2", "--e-count", "5",
        "--n-terms", "1500", "--output", str(target),
    )
    assert code == 0
    doc = json.loads(target.read_text())
    assert len(doc) == 5
    for rep in doc:
        assert abs(rep["ratio"] - 1.0) < 1e-5


def test_oracle_pole_grid_is_config_error(capsys):
    code, _, err = run(
        capsys,
        "oracle", "--model", "harmonic", "--k", "1.0",
        "--e-from", "0.25", "--e-to", "0.25", "--e-count", "1",
    )
    assert code == 1
    assert "error:" in err


def test_oracle_unreachable_tolerance_is_validation_failure(capsys):
    code, out, err = run(
        capsys,
        "oracle", "--model", "well", "--c", "1.0",
        "--e-from", "-1.0", "--e-to", "-0.5", "--e-count", "3",
        "--tol", "1e-16",
    )
    assert code == 2
    assert "validation failure" in err


# --------------------------------------------------------------- config


def test_config_file_drives_solve(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("model = free\na = 1.0\nb = 0.0\n", encoding="utf-8")
    code, out, _ = run(capsys, "solve", "--config", str(cfg))
    assert code == 0
    assert abs(float(out.strip().split("\n")[1].split(",")[1]) + 0.25) < 1e-12


def test_cli_flag_overrides_config(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("model = free\na = 1.0\n", encoding="utf-8")
    code, out, _ = run(capsys, "solve", "--config", str(cfg), "--a", "2.0")
    assert code == 0
    assert abs(float(out.strip().split("\n")[1].split(",")[1]) + 1.0) < 1e-12


def test_bad_config_reports_line(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("model = free\nwat = 1\n", encoding="utf-8")
    code, _, err = run(capsys, "solve", "--config", str(cfg))
    assert code == 1
    assert "line 2" in err


# -------------------------------------------------------------- figures


def test_figure_outputs_are_deterministic(capsys, tmp_path):
    d1 = tmp_path / "run1"
    d2 = tmp_path / "run2"
    for d in (d1, d2):
        d.mkdir()
        code, _, _ = run(
            capsys, "figure", "--which", "2", "--outdir", str(d), "--no-plot"
        )
        assert code == 0
    names = sorted(p.name for p in d1.iterdir())
    assert names == sorted(p.name for p in d2.iterdir())
    assert names, "figure 2 wrote no files"
    for name in names:
        assert name.endswith(".csv")
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()


def test_figure_plot_writes_png(capsys, tmp_path):
    code, _, _ = run(capsys, "figure", "--which", "2", "--outdir", str(tmp_path))
    assert code == 0
    png = tmp_path / "fig2.png"
    assert png.exists()
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_figure_number_out_of_range(capsys, tmp_path):
    code, _, err = run(
        capsys, "figure", "--which", "7", "--outdir", str(tmp_path)
    )
    assert code == 1
    assert "error:" in err


# -------------------------------------------------------------- logging


@pytest.mark.parametrize("level", ["quiet", "info", "debug"])
def test_log_levels_keep_stdout_clean(capsys, monkeypatch, level):
    # diagnostics go to stderr only; stdout stays machine-readable
    monkeypatch.setenv("PS_LOG", level)
    code, out, err = run(capsys, "threshold", "--k", "1.0", "--a", "1.0")
    assert code == 0
    assert out.strip() == "0.5"


def test_unknown_log_level_falls_back(capsys, monkeypatch):
    monkeypatch.setenv("PS_LOG", "shouty")
    code, out, _ = run(capsys, "threshold", "--k", "4.0", "--a", "1.0")
    assert code == 0
    assert out.strip() == "0.25"
