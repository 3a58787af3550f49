import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import assert_distances_match, svg_circles
from diamondplot.cli import run
from diamondplot.scene import bundle_from_json

GOLDEN_DIR = Path(__file__).parent / "golden"

CSV = "a,b\n1,2\n3,4\n5,5\n"


def cli(*argv, cwd=None):
    """Run the CLI in a subprocess with a clean seed environment."""
    env = dict(os.environ)
    env.pop("DIAMONDPLOT_SEED", None)
    return subprocess.run(
        [sys.executable, "-m", "diamondplot.cli", *argv],
        capture_output=True,
        cwd=cwd,
        env=env,
    )


@pytest.fixture()
def csv_file(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text(CSV)
    return path


def test_demo_matches_golden(tmp_path):
    out = tmp_path / "a1.svg"
    proc = cli("demo", "--dataset", "anscombe1", "--mode", "diamond", "--out", str(out))
    assert proc.returncode == 0
    assert proc.stdout == b""  # human messages go to stderr
    assert out.read_bytes() == (GOLDEN_DIR / "anscombe1_diamond.svg").read_bytes()


def test_two_consecutive_runs_byte_identical(tmp_path):
    outs = []
    for name in ("one.svg", "two.svg"):
        out = tmp_path / name
        proc = cli("demo", "--dataset", "fig5e", "--out", str(out))
        assert proc.returncode == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_missing_input_file_exit_2(tmp_path):
    proc = cli("plot", "--input", "missing.csv", "--col1", "a", "--col2", "b",
               "--out", str(tmp_path / "x.svg"), cwd=tmp_path)
    assert proc.returncode == 2
    assert b"missing.csv" in proc.stderr
    assert proc.stdout == b""


def test_unknown_column_exit_2(csv_file, tmp_path):
    proc = cli("plot", "--input", str(csv_file), "--col1", "a", "--col2", "zz",
               "--out", str(tmp_path / "x.svg"))
    assert proc.returncode == 2
    assert b"zz" in proc.stderr


def test_bad_row_exit_2_strict_but_ok_lenient(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n1,2\nx,4\n5,6\n")
    out = tmp_path / "x.svg"
    proc = cli("plot", "--input", str(path), "--col1", "a", "--col2", "b", "--out", str(out))
    assert proc.returncode == 2
    proc = cli("plot", "--input", str(path), "--col1", "a", "--col2", "b",
               "--out", str(out), "--lenient")
    assert proc.returncode == 0
    assert b"row" in proc.stderr and b"2" in proc.stderr


def test_usage_errors_exit_1(tmp_path):
    assert cli("plot", "--nope").returncode == 1
    assert cli("demo", "--dataset", "anscombe1", "--mode", "triangle",
               "--out", str(tmp_path / "x.svg")).returncode == 1
    assert cli().returncode == 1
    # viewport too small for the margins is a usage problem, not a data one
    proc = cli("demo", "--dataset", "anscombe1", "--out", str(tmp_path / "x.svg"),
               "--width", "10", "--height", "10")
    assert proc.returncode == 1


def test_help_exits_zero():
    proc = cli("--help")
    assert proc.returncode == 0


def test_stats_prints_single_json_object(csv_file):
    proc = cli("stats", "--input", str(csv_file), "--col1", "a", "--col2", "b")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout.decode())
    assert doc["n"] == 3
    assert set(doc) == {
        "n", "mean1", "mean2", "var1", "var2", "pearson_r",
        "ols_slope", "ols_intercept", "deming_slope", "deming_intercept",
    }


def test_scatter_modes_are_mirrors(csv_file, tmp_path):
    paths = {}
    for mode in ("scatter", "scatter-swapped"):
        out = tmp_path / f"{mode}.svg"
        proc = cli("plot", "--input", str(csv_file), "--col1", "a", "--col2", "b",
                   "--mode", mode, "--out", str(out))
        assert proc.returncode == 0
        paths[mode] = svg_circles(out.read_bytes())
    assert_distances_match(paths["scatter"], paths["scatter-swapped"], rel=1e-9)


def test_env_seed_matches_explicit_flag(tmp_path):
    out_env = tmp_path / "env.svg"
    out_flag = tmp_path / "flag.svg"
    env = dict(os.environ, DIAMONDPLOT_SEED="777")
    proc = subprocess.run(
        [sys.executable, "-m", "diamondplot.cli", "demo", "--dataset", "fig5a",
         "--out", str(out_env)],
        capture_output=True,
        env=env,
    )
    assert proc.returncode == 0
    assert cli("demo", "--dataset", "fig5a", "--seed", "777",
               "--out", str(out_flag)).returncode == 0
    assert out_env.read_bytes() == out_flag.read_bytes()


def test_bundle_from_csv_and_from_dataset(csv_file, tmp_path):
    out = tmp_path / "b.json"
    proc = cli("bundle", "--input", str(csv_file), "--col1", "a", "--col2", "b",
               "--out", str(out))
    assert proc.returncode == 0
    bundle = bundle_from_json(out.read_bytes())
    assert bundle.dataset.label1 == "a"
    assert [s.orientation.value for s in bundle.scenes] == [
        "diamond", "scatter_v1h", "scatter_v2h",
    ]
    out2 = tmp_path / "b2.json"
    assert cli("bundle", "--dataset", "anscombe1", "--out", str(out2)).returncode == 0
    assert abs(bundle_from_json(out2.read_bytes()).stats.pearson_r - 0.816) < 1e-3


def test_bundle_needs_exactly_one_source(csv_file, tmp_path):
    out = tmp_path / "b.json"
    assert cli("bundle", "--out", str(out)).returncode == 1
    proc = cli("bundle", "--input", str(csv_file), "--col1", "a", "--col2", "b",
               "--dataset", "anscombe1", "--out", str(out))
    assert proc.returncode == 1


def test_in_process_run_matches_subprocess(tmp_path, capsys):
    out = tmp_path / "x.svg"
    code = run(["demo", "--dataset", "anscombe2", "--out", str(out)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == ""
    assert "x.svg" in captured.err
