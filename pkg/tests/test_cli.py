"""CLI surface: schemas, determinism, exit codes."""

import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from paleylab.cli import main
from paleylab.experiments import ExperimentConfig, primes_1mod4, run_esd_distance, run_spectrum


def strip_meta(text):
    return "\n".join(l for l in text.splitlines() if not l.startswith("#"))


def test_primes_1mod4():
    assert primes_1mod4(5, 61) == [5, 13, 17, 29, 37, 41, 53, 61]
    assert primes_1mod4(190, 210) == [193, 197]


def test_spectrum_command(tmp_path):
    out = tmp_path / "f1.csv"
    res = CliRunner().invoke(main, ["spectrum", "--p", "229", "--a", "0", "--a", "1",
                                    "--out", str(out)])
    assert res.exit_code == 0, res.output
    text = out.read_text()
    assert text.splitlines()[0] == "# schema=paleylab.spectrum.v1"
    rows = [l.split(",") for l in strip_meta(text).splitlines()[1:]]
    a0 = [r for r in rows if r[1] == "0"]
    a1 = [r for r in rows if r[1] == "1"]
    # a=0 non-Perron spectrum has exactly two distinct values (up to fft roundoff)
    assert len({round(float(r[4]), 6) for r in a0}) == 2
    assert len(a1) == (229 - 1) // 2 - 1
    assert (tmp_path / "f1.overlay.csv").exists()


def test_esd_distance_rows_and_determinism(tmp_path):
    args = ["esd-distance", "--p-max", "60", "--a", "1", "--a", "2"]
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert CliRunner().invoke(main, args + ["--out", str(out1)]).exit_code == 0
    assert CliRunner().invoke(main, args + ["--threads", "3", "--out", str(out2)]).exit_code == 0
    assert strip_meta(out1.read_text()) == strip_meta(out2.read_text())
    rows = strip_meta(out1.read_text()).splitlines()[1:]
    # one row per (p, a), distances in [0, 1]
    assert len(rows) == 2 * len(primes_1mod4(13, 60))
    for r in rows:
        parts = r.split(",")
        assert 0.0 <= float(parts[2]) <= 1.0


def test_min_eig_schema(tmp_path):
    out = tmp_path / "f3.csv"
    res = CliRunner().invoke(main, ["min-eig", "--p-max", "60", "--a", "1", "--out", str(out)])
    assert res.exit_code == 0
    lines = strip_meta(out.read_text()).splitlines()
    assert lines[0] == "p,a,neg_min_mean,neg_min_min,neg_min_max,n_reps,conjecture_line"
    p, a, m, lo, hi, n, line = lines[1].split(",")
    assert float(line) == pytest.approx(2 * math.sqrt(1) * math.sqrt(int(p)) / 4)


def test_quartic_modes(tmp_path):
    r1 = CliRunner().invoke(main, ["quartic", "--p", "101", "--out", str(tmp_path / "f6.csv")])
    assert r1.exit_code == 0
    assert (tmp_path / "f6.overlay.csv").exists()
    r2 = CliRunner().invoke(main, ["quartic", "--p-max", "101", "--out", str(tmp_path / "f7.csv")])
    assert r2.exit_code == 0
    both = CliRunner().invoke(main, ["quartic", "--p", "13", "--p-max", "17",
                                     "--out", str(tmp_path / "x.csv")])
    assert both.exit_code != 0


def test_json_format(tmp_path):
    out = tmp_path / "t.json"
    res = CliRunner().invoke(main, ["traces", "--p", "61", "--k", "4",
                                    "--format", "json", "--out", str(out)])
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert data["meta"]["schema"] == "paleylab.traces.v1"
    assert data["columns"][:4] == ["p", "a", "I", "k"]
    assert len(data["rows"]) == 8  # k = 1..4 for both signs


def test_guard_exit_code(tmp_path):
    res = CliRunner().invoke(main, ["spectrum", "--p", "12", "--out", str(tmp_path / "x.csv")])
    assert res.exit_code == 2


def test_necklace_and_bounds_tables(tmp_path):
    out = tmp_path / "n.csv"
    res = CliRunner().invoke(main, ["necklace", "--p-max", "40", "--k", "2", "--out", str(out)])
    assert res.exit_code == 0
    rows = strip_meta(out.read_text()).splitlines()[1:]
    for r in rows:
        p, k, a, zs, sigma, normalized, bound, method = r.split(",")
        assert abs(float(sigma)) <= float(bound) + 1e-6
        assert float(normalized) <= 1.0
    outb = tmp_path / "b.csv"
    res = CliRunner().invoke(main, ["bounds", "--p-max", "40", "--out", str(outb)])
    assert res.exit_code == 0
    rows = strip_meta(outb.read_text()).splitlines()[1:]
    for r in rows:
        p, method, a, bound, omega = r.split(",")
        if omega and "nonrigorous" not in method:
            assert float(bound) >= int(omega) - 1e-9


def test_run_spectrum_library_interface():
    table, overlay = run_spectrum(ExperimentConfig("spectrum", p=101, a_list=(1,)))
    assert table.schema == "paleylab.spectrum.v1"
    assert len(table.rows) == (101 - 1) // 2 - 1
    assert all(r[0] == 1 for r in overlay.rows)
