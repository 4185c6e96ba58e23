"""End-to-end command-line behavior: payloads, determinism, exit codes."""

import csv
import io
import json
import math

import pytest

from harmonicdisk.cli import main

IDENT_CROSSCUT_LEN = 2.0943927929925036  # FROZEN, rho=1 about zeta0=1


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_gallery_lists_names(capsys):
    code, out, _ = run_cli(capsys, "gallery")
    assert code == 0
    names = out.splitlines()
    assert "identity" in names
    assert len(names) == 5


def test_eval_identity(capsys):
    code, out, _ = run_cli(capsys, "eval", "--spec", "identity",
                           "--z", "0.25,0", "--z", "0,0.5")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 2
    assert float(rows[0]["f_re"]) == 0.25
    assert float(rows[0]["op_norm"]) == 1.0
    assert float(rows[0]["jacobian"]) == 1.0
    assert float(rows[0]["omega_abs"]) == 0.0
    assert float(rows[1]["f_im"]) == 0.5


def test_eval_z_file_and_json_format(capsys, tmp_path):
    zf = tmp_path / "probes.txt"
    zf.write_text("# probes\n0.1,0.2\n\n0.3,0\n")
    code, out, _ = run_cli(capsys, "eval", "--spec", "affine:1,0.5",
                           "--z-file", str(zf), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 2
    # f(0.3) = 0.3 + 0.15
    assert float(payload[1]["f_re"]) == pytest.approx(0.45)


def test_eval_requires_probes_and_interior(capsys):
    code, _, err = run_cli(capsys, "eval", "--spec", "identity")
    assert code == 1
    assert "error:" in err
    code, _, err = run_cli(capsys, "eval", "--spec", "identity",
                           "--z", "2,0")
    assert code == 1


def test_length_level(capsys):
    code, out, _ = run_cli(capsys, "length", "--spec", "identity",
                           "--which", "level", "--r", "0.5")
    assert code == 0
    rows = parse_csv(out)
    assert float(rows[0]["length"]) == pytest.approx(math.pi, abs=1e-10)


def test_length_crosscut_frozen_value(capsys):
    code, out, _ = run_cli(capsys, "length", "--spec", "identity",
                           "--which", "crosscut", "--zeta0", "1,0",
                           "--rho", "1.0")
    assert code == 0
    rows = parse_csv(out)
    assert float(rows[0]["length"]) == pytest.approx(IDENT_CROSSCUT_LEN,
                                                     abs=1e-9)


def test_length_boundary_measure(capsys):
    code, out, _ = run_cli(capsys, "length", "--spec", "identity",
                           "--which", "boundary", "--measure", "1.5707963")
    assert code == 0
    rows = parse_csv(out)
    want = (1.0 - 1e-6) * 1.5707963
    assert float(rows[0]["length"]) == pytest.approx(want, abs=1e-8)


def test_length_radial(capsys):
    code, out, _ = run_cli(capsys, "length", "--spec", "affine:1,0.5",
                           "--which", "radial", "--theta", "0", "--r", "1.0")
    assert code == 0
    rows = parse_csv(out)
    assert float(rows[0]["length"]) == pytest.approx(1.5, abs=1e-10)


def test_area_identity(capsys):
    code, out, _ = run_cli(capsys, "area", "--spec", "identity",
                           "--r", "0.9")
    assert code == 0
    rows = parse_csv(out)
    assert float(rows[0]["area"]) == pytest.approx(math.pi * 0.81, abs=1e-9)
    assert float(rows[0]["agreement"]) < 1e-8


def test_coeffs_poly(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--spec", "poly:z+0.3*zbar^2",
                           "--n-max", "3")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 4
    assert float(rows[1]["a_re"]) == pytest.approx(1.0, abs=1e-12)
    assert float(rows[2]["b_re"]) == pytest.approx(0.3, abs=1e-12)


def test_constants_square_file(capsys, tmp_path):
    cf = tmp_path / "square.txt"
    cf.write_text("1 1\n-1 1\n-1 -1\n1 -1\n")
    code, out, _ = run_cli(capsys, "constants", str(cf),
                           "--point-pairs", "4")
    assert code == 0
    rows = parse_csv(out)
    assert float(rows[0]["lavrentiev"]) == pytest.approx(math.sqrt(2.0))
    assert float(rows[0]["quasicircle"]) == pytest.approx(1.0)
    # flag spelling works too
    code, out, _ = run_cli(capsys, "constants", "--curve", str(cf),
                           "--point-pairs", "4")
    assert code == 0
    code, _, err = run_cli(capsys, "constants")
    assert code == 1


def test_verify_prop1_identity(capsys):
    code, out, _ = run_cli(capsys, "verify", "prop1", "--spec", "identity",
                           "--radii", "0.2,0.5,0.8")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 7
    assert all(r["holds"] == "true" for r in rows)
    assert rows[0]["name"] == "prop1_lower"


def test_verify_exit_2_on_violation(capsys):
    # non-onto self-map honestly fails the lower distortion bound
    code, out, _ = run_cli(capsys, "verify", "selfmap",
                           "--spec", "scaled:0.5", "--probes", "32")
    assert code == 2
    rows = parse_csv(out)
    holds = {r["name"]: r["holds"] for r in rows}
    assert holds["selfmap_lower"] == "false"
    assert holds["selfmap_upper"] == "true"


def test_verify_thm2_tiny_radius_fails(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm2", "--spec", "identity",
                           "--m-lav", str(0.5 * math.pi),
                           "--r-list", "0.05")
    assert code == 2
    rows = parse_csv(out)
    assert rows[0]["name"] == "thm2_chain_damped"
    assert rows[0]["holds"] == "false"
    assert rows[1]["holds"] == "true"


def test_verify_schwarz_out_files(capsys, tmp_path):
    out_path = tmp_path / "base.csv"
    code, out1, _ = run_cli(capsys, "verify", "schwarz", "--spec",
                            "identity", "--r-grid", "16",
                            "--out", str(out_path))
    assert code == 0
    assert out_path.exists()
    assert (tmp_path / "base.json").exists()
    assert (tmp_path / "base.meta.json").exists()
    payload = json.loads((tmp_path / "base.json").read_text())
    assert payload[0]["name"] == "schwarz_radial"
    assert payload[0]["holds"] is True
    first_bytes = out_path.read_bytes()
    # rerun: payload bytes identical (meta sidecar may differ)
    code, out2, _ = run_cli(capsys, "verify", "schwarz", "--spec",
                            "identity", "--r-grid", "16",
                            "--out", str(out_path))
    assert code == 0
    assert out_path.read_bytes() == first_bytes
    assert out1 == out2


def test_verify_json_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm5", "--spec", "scaled:2.0",
                           "--n-max", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["name"] == "thm5_coeff"
    assert payload[0]["params"]["M_rad"] == pytest.approx(2.0, abs=1e-8)


def test_usage_errors_exit_1(capsys):
    code, _, err = run_cli(capsys, "verify", "nosuchtheorem",
                           "--spec", "identity")
    assert code == 1
    code, _, err = run_cli(capsys, "verify", "prop1")
    assert code == 1
    assert "spec" in err
    code, _, err = run_cli(capsys, "length", "--spec", "identity",
                           "--which", "level", "--r", "1.5")
    assert code == 1
    code, _, err = run_cli(capsys, "eval", "--spec", "nosuchmap",
                           "--z", "0,0")
    assert code == 1


def test_numerical_failure_exit_3(capsys):
    code, _, err = run_cli(capsys, "length", "--spec", "poisson:phi=t",
                           "--which", "level", "--r", "0.999")
    assert code == 3
    assert "numerical failure" in err
