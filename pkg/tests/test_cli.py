import math
import subprocess
import sys

import pytest

from grover_phase import cli, experiments


def _run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sweep_to_file_is_repeatable(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.main(["sweep", "--n", "64", "--grid", "5x6", "--out", str(a)]) == 0
    assert cli.main(["sweep", "--qubits", "6", "--grid", "5x6", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "alpha,theta,phi_opt,p_opt,p_pi,improvement,phi_rough,rough_deviation"
    assert len(lines) == 31


def test_sweep_stdout(capsys):
    code, out, _ = _run(["sweep", "--n", "16", "--grid", "2x2", "--scan-points", "64", "--tol", "1e-9"], capsys)
    assert code == 0 and len(out.splitlines()) == 5


def test_trajectory_classical(capsys):
    code, out, _ = _run(["trajectory", "--n", "4", "--strategy", "classical", "--steps", "1"], capsys)
    assert code == 0
    last = out.splitlines()[-1].split(",")
    assert last[0] == "1" and float(last[2]) == pytest.approx(1.0, abs=1e-12)


def test_trajectory_default_steps(capsys):
    code, out, _ = _run(["trajectory", "--n", "64", "--strategy", "classical"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 1 + 2 * math.floor(math.pi / 4 * 8) + 1


def test_threshold(capsys):
    code, out, _ = _run(["threshold", "--n", "4", "6", "1024"], capsys)
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert [r[0] for r in rows] == ["4", "6", "1024"]
    assert float(rows[1][3]) == 0.5
    code, out, _ = _run(["threshold", "--qubits", "2", "10"], capsys)
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["4", "1024"]


def test_verify_pass_and_repeatable(capsys):
    code, first, _ = _run(["verify", "--qubits", "4", "--samples", "5", "--seed", "1"], capsys)
    assert code == 0 and first.splitlines()[-1] == "status=PASS"
    _, second, _ = _run(["verify", "--qubits", "4", "--samples", "5", "--seed", "1"], capsys)
    assert first == second


def test_verify_forced_phi(capsys):
    code, out, _ = _run(["verify", "--qubits", "2", "--samples", "1", "--phi", "0"], capsys)
    assert code == 0
    disc = float(out.splitlines()[-2].split("=")[1])
    assert disc <= 1e-15


def test_verify_failure_exit(monkeypatch, capsys):
    monkeypatch.setattr(experiments, "VERIFY_BOUND", -1.0)
    code, out, _ = _run(["verify", "--qubits", "2", "--samples", "2"], capsys)
    assert code == 2 and out.splitlines()[-1] == "status=FAIL"


@pytest.mark.parametrize("argv", [
    ["trajectory", "--strategy", "greedy"],
    ["trajectory", "--n", "16", "--steps", "0"],
    ["sweep", "--n", "1"],
    ["sweep", "--grid", "10by10"],
    ["sweep", "--n", "16", "--qubits", "4"],
    ["verify", "--qubits", "15"],
    ["bogus"],
    [],
])
def test_usage_errors(argv, capsys):
    code, _, err = _run(argv, capsys)
    assert code == 1 and "error" in err


def test_unwritable_output(tmp_path, capsys):
    path = tmp_path / "missing" / "x.csv"
    code, _, err = _run(["threshold", "--n", "8", "--out", str(path)], capsys)
    assert code == 3 and "I/O" in err


def test_bad_strategy_leaves_no_file(tmp_path):
    path = tmp_path / "t.csv"
    assert cli.main(["trajectory", "--strategy", "nope", "--out", str(path)]) == 1
    assert not path.exists()


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "grover_phase", "threshold", "--n", "6"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert res.stdout.splitlines()[1].split(",")[3] == "0.5"
