import math
import subprocess
import sys

import numpy as np
import pytest

from fermitangle import cli
from fermitangle.sweep import COLUMNS, Grid, SweepConfig, parse_angle, read_csv, write_sweep


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def sweep_rows(path):
    return read_csv(path.read_text())


def test_w_two_step_sweep(tmp_path, capsys):
    out = tmp_path / "w.csv"
    code, stdout, _ = run(["sweep", "--state", "w", "--r-steps", "2", "--out", str(out)], capsys)
    assert code == 0
    assert "wrote 2 rows" in stdout
    text = out.read_text()
    header = [l for l in text.splitlines() if not l.startswith("#")][0]
    assert header == ",".join(COLUMNS)
    rows = sweep_rows(out)
    assert rows[0]["r"] == 0
    assert rows[0]["N_A"] == pytest.approx(0.9428, abs=5e-5)
    assert rows[0]["N_AB"] == pytest.approx(0.4120, abs=5e-5)
    assert rows[1]["r"] == pytest.approx(math.pi / 4, abs=1e-9)


def test_ghz_single_point(tmp_path, capsys):
    out = tmp_path / "g.csv"
    code, _, _ = run(["sweep", "--state", "ghz", "--r-min", "0", "--r-max", "0", "--r-steps", "1",
                      "--ra-min", "0", "--ra-max", "0", "--ra-steps", "1", "--out", str(out)], capsys)
    assert code == 0
    (row,) = sweep_rows(out)
    assert (row["N_A"], row["N_B"], row["N_C"]) == (1, 1, 1)
    assert (row["N_AB"], row["N_AC"], row["N_BC"]) == (0, 0, 0)
    assert row["pi_tangle"] == 1


def test_w_single_point_past_crossing(tmp_path, capsys):
    out = tmp_path / "w.csv"
    code, _, _ = run(["sweep", "--r-min", "pi/4", "--r-max", "pi/4", "--r-steps", "1",
                      "--out", str(out)], capsys)
    assert code == 0
    (row,) = sweep_rows(out)
    assert row["N_AB"] == 0
    assert "-0" not in out.read_text()


def test_stdout_when_no_out(capsys):
    code, stdout, _ = run(["sweep", "--r-steps", "3"], capsys)
    assert code == 0
    assert len(read_csv(stdout)) == 3


def test_ghz_default_ra_fixed_at_pi4(tmp_path, capsys):
    out = tmp_path / "g.csv"
    run(["sweep", "--state", "ghz", "--r-steps", "5", "--out", str(out)], capsys)
    text = out.read_text()
    assert f"# r_a fixed at {math.pi / 4!r}" in text
    rows = sweep_rows(out)
    assert len(rows) == 5
    assert all(row["r_a"] == pytest.approx(math.pi / 4) for row in rows)


def test_row_major_order(tmp_path, capsys):
    out = tmp_path / "g.csv"
    run(["sweep", "--state", "ghz", "--r-steps", "3", "--ra-min", "0", "--ra-max", "pi/4",
         "--ra-steps", "2", "--out", str(out)], capsys)
    rows = sweep_rows(out)
    pairs = [(row["r_a"], row["r"]) for row in rows]
    assert pairs == sorted(pairs)
    assert [p[0] for p in pairs] == [0, 0, 0, pairs[3][0], pairs[3][0], pairs[3][0]]


def test_deterministic_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--state", "ghz", "--r-steps", "4", "--ra-min", "0", "--ra-max", "0.5",
            "--ra-steps", "3"]
    run(args + ["--out", str(a)], capsys)
    run(args + ["--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("state", ["w", "ghz"])
def test_row_invariants_full_precision(state):
    cfg = SweepConfig(state, Grid(0, math.pi / 4, 20),
                      None if state == "w" else Grid(0, math.pi / 4, 5), digits=17)
    text, _ = write_sweep(cfg)
    for row in read_csv(text):
        assert abs(row["pi_tangle"] - (row["pi_A"] + row["pi_B"] + row["pi_C"]) / 3) <= 1e-12
        assert all(row[c] >= -1e-12 for c in COLUMNS if c.startswith("N_"))


def test_row_invariants_default_digits():
    # ten significant digits: rounding bounds the identity at 1e-10
    text, _ = write_sweep(SweepConfig("w", Grid(0, math.pi / 4, 30)))
    for row in read_csv(text):
        assert abs(row["pi_tangle"] - (row["pi_A"] + row["pi_B"] + row["pi_C"]) / 3) <= 1e-10


def test_w_rows_symmetric():
    text, _ = write_sweep(SweepConfig("w", Grid(0, math.pi / 4, 50), digits=17))
    for row in read_csv(text):
        assert max(row["N_A"], row["N_B"], row["N_C"]) - min(row["N_A"], row["N_B"], row["N_C"]) < 1e-10
        twos = (row["N_AB"], row["N_AC"], row["N_BC"])
        assert max(twos) - min(twos) < 1e-10


def test_digits_flag(capsys):
    _, stdout, _ = run(["sweep", "--r-min", "0", "--r-max", "0", "--r-steps", "1", "--digits", "4"],
                       capsys)
    data = [l for l in stdout.splitlines() if not l.startswith("#")][1]
    assert data.split(",")[2] == "0.9428"


def test_custom_state(tmp_path, capsys):
    state = tmp_path / "w.txt"
    state.write_text("# W, unnormalized\n001 = 1\n010 = 1\n100 = 1\n")
    out = tmp_path / "c.csv"
    code, _, _ = run(["sweep", "--state", f"custom:{state}", "--r-min", "0", "--r-max", "0",
                      "--r-steps", "1", "--ra-min", "0", "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert "renormalized" in text
    (row,) = read_csv(text)
    assert row["N_A"] == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-9)


@pytest.mark.parametrize("argv", [
    ["sweep", "--bogus"],
    ["sweep", "--state", "w", "--ra-min", "0"],
    ["sweep", "--r-min", "0.5", "--r-max", "0.1"],
    ["sweep", "--r-max", "1.0"],
    ["sweep", "--r-steps", "0"],
    ["sweep", "--r-min", "0", "--r-max", "0.5", "--r-steps", "1"],
    ["sweep", "--state", "bell"],
    ["sweep", "--digits", "0"],
    ["sweep", "--r-min", "abc"],
    ["frobnicate"],
])
def test_bad_config_exit_2(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_malformed_custom_file_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0011 = 1\n")
    code, _, err = run(["sweep", "--state", f"custom:{bad}"], capsys)
    assert code == 2
    assert "line 1" in err


def test_io_errors_exit_3(tmp_path, capsys):
    code, _, _ = run(["sweep", "--out", str(tmp_path / "missing" / "x.csv")], capsys)
    assert code == 3
    code, _, _ = run(["sweep", "--state", f"custom:{tmp_path / 'nope.txt'}"], capsys)
    assert code == 3


def test_zero_command(capsys):
    code, stdout, _ = run(["zero"], capsys)
    assert code == 0
    lines = dict(line.split(" = ", 1) for line in stdout.splitlines())
    r_star = float(lines["r*"])
    assert r_star == pytest.approx(math.acos(math.sqrt(2 - math.sqrt(2))), abs=1e-10)
    assert float(lines["cos^2(r*)"].split()[0]) == pytest.approx(2 - math.sqrt(2), abs=1e-10)
    assert float(lines["two-tangle(r* +0.01)"]) == 0
    assert float(lines["two-tangle(r* -0.01)"]) > 0


def test_check_command(capsys):
    code, stdout, _ = run(["check"], capsys)
    assert code == 0
    assert "11/11 checks passed" in stdout
    assert "0.0971 is NOT reproduced" in stdout
    assert "FAIL" not in stdout


def test_check_failure_exit_1(monkeypatch, capsys):
    from fermitangle import checks

    failing = checks.CheckResult("CX", "forced failure", False)
    monkeypatch.setattr(checks, "ALL_CHECKS", (lambda: failing,))
    code, stdout, _ = run(["check"], capsys)
    assert code == 1
    assert "[FAIL] CX" in stdout


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fermitangle", "zero"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("r* = 0.69918516")


@pytest.mark.parametrize("text, value", [
    ("0.25", 0.25), ("pi/4", math.pi / 4), ("pi/8", math.pi / 8), ("0.5*pi/2", math.pi / 4),
])
def test_parse_angle(text, value):
    assert parse_angle(text) == pytest.approx(value, abs=1e-15)
