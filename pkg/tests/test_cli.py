import numpy as np
import pytest

from entpower import cli

SWEEP_HEADER = "mu,ep_eof,ep_tangle,mems_eof,gap,argmax,n_samples"


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def tiny_sweep_args(out_path, extra=()):
    return [
        "sweep", "--theta-x", "pi/8", "--theta-y", "pi/8", "--theta-z", "0",
        "--family", "product", "--mu-min", "0.4", "--mu-max", "0.9",
        "--mu-steps", "4", "--samples", "800", "--seed", "7",
        "--out", str(out_path), *extra,
    ]


def test_sweep_writes_schema_stable_csv(tmp_path, capsys):
    out = tmp_path / "c.csv"
    code, _, _ = run(tiny_sweep_args(out), capsys)
    assert code == 0
    raw = out.read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")
    lines = raw.decode().splitlines()
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 5
    for line in lines[1:]:
        assert len(line.split(",")) == 7


def test_sweep_byte_identical_reruns_and_threads(tmp_path, capsys):
    a, b, c = (tmp_path / n for n in ("a.csv", "b.csv", "c.csv"))
    assert run(tiny_sweep_args(a), capsys)[0] == 0
    assert run(tiny_sweep_args(b), capsys)[0] == 0
    assert run(tiny_sweep_args(c, extra=["--threads", "3"]), capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_sweep_identity_gate_zero_column(tmp_path, capsys):
    out = tmp_path / "id.csv"
    code, _, _ = run([
        "sweep", "--theta-x", "0", "--theta-y", "0", "--theta-z", "0",
        "--family", "cc", "--mu-min", "0.4", "--mu-max", "0.8",
        "--mu-steps", "3", "--samples", "600", "--seed", "1",
        "--out", str(out),
    ], capsys)
    assert code == 0
    for line in out.read_text().splitlines()[1:]:
        assert line.split(",")[1] == "0"


def test_sweep_injected_gap_column(tmp_path, capsys):
    out = tmp_path / "inj.csv"
    code, _, _ = run(tiny_sweep_args(out, extra=["--inject-analytic"]), capsys)
    assert code == 0
    for line in out.read_text().splitlines()[1:]:
        assert abs(float(line.split(",")[4])) <= 1e-10


def test_sweep_stdout_default(capsys):
    code, out, _ = run([
        "sweep", "--theta-x", "0", "--theta-y", "0", "--family", "cc",
        "--mu-min", "0.5", "--mu-max", "0.5", "--mu-steps", "1",
        "--samples", "100",
    ], capsys)
    assert code == 0
    assert out.startswith(SWEEP_HEADER)


def test_sweep_usage_errors(capsys):
    assert run(["sweep", "--theta-x", "abc", "--theta-y", "0",
                "--family", "cc"], capsys)[0] == 2
    assert run(["sweep", "--theta-x", "0", "--theta-y", "0",
                "--family", "nope"], capsys)[0] == 2
    assert run(["sweep", "--theta-x", "0", "--theta-y", "0", "--family", "cc",
                "--mu-min", "0.2"], capsys)[0] == 2
    assert run(["sweep", "--theta-x", "0", "--theta-y", "0", "--family", "cc",
                "--unknown-flag", "1"], capsys)[0] == 2


def test_sweep_io_error(tmp_path, capsys):
    missing = tmp_path / "no" / "such" / "dir" / "x.csv"
    code, _, err = run(tiny_sweep_args(missing), capsys)
    assert code == 3
    assert "i/o" in err.lower()


def test_verify_default_passes(capsys):
    code, out, _ = run(["verify"], capsys)
    assert code == 0
    assert "7/7 checks passed" in out
    assert out.count("[PASS]") == 7


def test_verify_unattainable_tolerance(capsys):
    code, out, _ = run(["verify", "--tolerance", "1e-300"], capsys)
    assert code == 1
    assert "[FAIL]" in out


def test_verify_bad_tolerance(capsys):
    assert run(["verify", "--tolerance", "abc"], capsys)[0] == 2
    assert run(["verify", "--tolerance", "-1"], capsys)[0] == 2


def test_mems_curve_endpoints(tmp_path, capsys):
    out = tmp_path / "m.csv"
    code, _, _ = run(["mems-curve", "--mu-min", "0.5", "--mu-max", "1.0",
                      "--mu-steps", "3", "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "mu,gamma,concurrence,eof"
    last = lines[-1].split(",")
    assert float(last[0]) == 1.0 and float(last[3]) == 1.0


def test_mems_curve_branch_point(capsys):
    code, out, _ = run(["mems-curve", "--mu-min", repr(5 / 9),
                        "--mu-steps", "1"], capsys)
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert float(row[1]) == pytest.approx(2 / 3, abs=1e-10)


def test_mems_curve_below_esd_bound(capsys):
    assert run(["mems-curve", "--mu-min", "0.30"], capsys)[0] == 2


def test_state_info_mems(capsys):
    code, out, _ = run(["state-info", "--family", "mems", "--gamma", "0.8",
                        "--phi", "pi/2"], capsys)
    assert code == 0
    assert "concurrence: 0.8" in out
    assert "eof: 0.721928094887" in out
    assert "matrix (re):" in out and "matrix (im):" in out


def test_state_info_rho_diag_pure(capsys):
    code, out, _ = run(["state-info", "--family", "rho-diag", "--a", "0"], capsys)
    assert code == 0
    assert "eof: 0" in out
    assert "purity: 1" in out


def test_state_info_out_of_range(capsys):
    code, _, err = run(["state-info", "--family", "rho-c", "--gamma", "0.9"],
                       capsys)
    assert code == 2
    assert "error" in err.lower()


def test_state_info_unknown_family(capsys):
    assert run(["state-info", "--family", "bogus", "--gamma", "0.1"],
               capsys)[0] == 2


def test_state_info_missing_param(capsys):
    assert run(["state-info", "--family", "mems"], capsys)[0] == 2


def test_no_subcommand_is_usage_error(capsys):
    assert run([], capsys)[0] == 2


def test_csv_numbers_have_twelve_significant_digits(tmp_path, capsys):
    out = tmp_path / "d.csv"
    run(tiny_sweep_args(out, extra=["--inject-analytic"]), capsys)
    row = out.read_text().splitlines()[1].split(",")
    mems_eof = row[3]
    mantissa = mems_eof.replace("-", "").replace(".", "").lstrip("0")
    assert len(mantissa) <= 12