import csv
import json
import subprocess
import sys

import numpy as np
import pytest
from scipy.integrate import trapezoid

from dirac_isospectral import __version__
from dirac_isospectral import families as fam
from dirac_isospectral.cli import main, parse_lambda_list


def _read(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array(rows[1:], dtype=float)


def test_parse_lambda_list_keywords():
    ds = parse_lambda_list("0, 0.05,inf,-inf,am,pursey,undeformed,-1.1")
    assert [d.label for d in ds] == [
        "pursey", "lambda=0.05", "undeformed", "undeformed", "am", "pursey", "undeformed", "lambda=-1.1",
    ]


def test_radial_potential_columns(tmp_path):
    out = tmp_path / "radial.csv"
    assert main(["potential", "--family", "radial", "--lambda", "0,0.05,0.1,1,inf", "--out", str(out)]) == 0
    header, data = _read(out)
    assert header == ["x", "phi_pursey", "phi_lambda=0.05", "phi_lambda=0.1", "phi_lambda=1.0", "phi_undeformed"]
    assert data.shape[1] == 6 and data.shape[0] == 4000
    assert np.all(np.isfinite(data))
    x = data[:, 0]
    assert np.allclose(data[:, 5], fam.phi_ext(fam.RadialOscillator(3.0, 1.0), x), rtol=1e-15, atol=0)


def test_negative_list_with_equals(tmp_path):
    out = tmp_path / "gpt-negative.csv"
    rc = main(["potential", "--family", "gpt", "--lambda=-inf,-1.1,-1.01,-1.001,-1", "--out", str(out)])
    assert rc == 0
    header, data = _read(out)
    assert header[1:] == ["phi_undeformed", "phi_lambda=-1.1", "phi_lambda=-1.01", "phi_lambda=-1.001", "phi_am"]
    assert np.all(np.isfinite(data))


def test_no_lambda_gives_single_undeformed_column(tmp_path):
    out = tmp_path / "plain.csv"
    assert main(["potential", "--family", "scarf", "--out", str(out)]) == 0
    header, _ = _read(out)
    assert header == ["x", "phi_undeformed"]


def test_csv_round_trip_and_reproducible(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["potential", "--family", "scarf", "--lambda", "0.001,0.1,1,inf", "--grid-n", "300"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    raw = a.read_bytes()
    assert raw == b.read_bytes()
    assert b"\r\n" not in raw and raw.endswith(b"\n")
    _, data = _read(a)
    # %.17g round-trips doubles exactly
    for line, row in zip(raw.decode().splitlines()[1:], data):
        assert [float(t) for t in line.split(",")] == row.tolist()


def test_stdout_output(capsys):
    assert main(["potential", "--grid-n", "200", "--lambda", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("x,phi_lambda=1.0\n")
    assert len(out.splitlines()) == 201


@pytest.mark.parametrize(
    "family, n, lams",
    [
        ("radial", 0, "0.05,0.1,1,inf"),
        ("radial", 1, "0,-1,0.05,inf"),
        ("scarf", 0, "0.001,0.1,1,inf"),
        ("scarf", 2, "pursey,am,-1.5"),
        ("gpt", 0, "0.001,0.01,1,inf"),
        ("gpt", 1, "0,-1,-1.01"),
    ],
)
def test_wavefunction_columns_are_normalised(tmp_path, family, n, lams):
    out = tmp_path / "wf.csv"
    assert main(["wavefunction", "--family", family, "--n", str(n), f"--lambda={lams}", "--out", str(out)]) == 0
    _, data = _read(out)
    x = data[:, 0]
    for col in data[:, 1:].T:
        assert abs(trapezoid(col * col, x) - 1) < 1e-4


def test_wavefunction_divide_by_r(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    base = ["wavefunction", "--lambda", "0.05,inf", "--grid-n", "400"]
    assert main(base + ["--out", str(a)]) == 0
    assert main(base + ["--divide-by-r", "--out", str(b)]) == 0
    _, da = _read(a)
    _, db = _read(b)
    assert np.allclose(db[:, 1:], da[:, 1:] / da[:, :1], rtol=1e-15)


def test_spectrum_rows(capsys):
    assert main(["spectrum", "--family", "radial", "--k", "3"]) == 0
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == ["spectrum", "n", "E", "epsilon"]
    by = {}
    for name, n, e, _ in rows[1:]:
        by.setdefault(name, []).append(float(e))
    assert by == {"sector1": [0, 6, 12], "sector2": [6, 12, 18], "pursey": [6, 12, 18], "am": [6, 12, 18]}


def test_spectrum_truncation_note(capsys):
    assert main(["spectrum", "--family", "gpt", "--k", "4"]) == 0
    captured = capsys.readouterr()
    assert "only 2 bound state(s)" in captured.err
    assert len(captured.out.splitlines()) == 1 + 2 + 1 + 1 + 1


@pytest.mark.parametrize(
    "argv",
    [
        ["potential", "--lambda", "-0.5"],
        ["potential", "--lambda=-0.5"],
        ["potential", "--lambda", "abc"],
        ["potential", "--family", "morse"],
    ],
)
def test_argument_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert "error" in capsys.readouterr().err


def test_lambda_rule_in_message(capsys):
    with pytest.raises(SystemExit):
        main(["potential", "--lambda=-0.5"])
    assert "lambda > 0 or lambda < -1" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["potential", "--family", "scarf", "--A", "2", "--B", "3"],
        ["potential", "--family", "radial", "--A", "2"],
        ["potential", "--xmin", "-1"],
        ["wavefunction", "--lambda", "pursey", "--n", "0"],
        ["wavefunction", "--family", "gpt", "--n", "2"],
        ["wavefunction", "--family", "scarf", "--divide-by-r"],
        ["verify", "--lambda", "pursey"],
        ["spectrum", "--format", "report-text"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_singular_explicit_cut_exits_3(tmp_path, capsys):
    out = tmp_path / "x.csv"
    assert main(["potential", "--lambda", "pursey", "--xmin", "1e-5", "--out", str(out)]) == 3
    assert "numerical failure" in capsys.readouterr().err
    assert not out.exists()


def test_verify_coarse_grid_exits_1(capsys):
    assert main(["verify", "--family", "radial", "--grid-n", "200"]) == 1
    captured = capsys.readouterr()
    assert "grid too coarse" in captured.out
    assert "check failed" in captured.err


def test_verify_report_tree(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--family", "gpt", "--format", "report-tree", "--out", str(out)]) == 0
    tree = json.loads(out.read_text())
    assert tree["passed"] and tree["n_failed"] == 0 and tree["n_checks"] > 20


def test_module_entry_point_version():
    res = subprocess.run(
        [sys.executable, "-m", "dirac_isospectral", "--version"], capture_output=True, text=True, check=True
    )
    assert res.stdout.strip() == f"dirac-iso {__version__}"
