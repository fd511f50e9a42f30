"""Command-line interface: output formats, exit codes, and determinism."""

import json

import numpy as np
import pytest

from memspec import DampingBound, ExponentialKernel, one_pole_region
from memspec.cli import CSV_HEADER, main

GRADED = {
    "coefficient_a": 1.0,
    "kernel": {"a": [1.0], "b": [1.0]},
    "damping": {"kind": "range", "b_min": 0.5, "b_max": 0.75},
    "domain": {"kind": "box", "lengths": [1.0, 1.0]},
}

CONSTANT = {
    "coefficient_a": 2.0,
    "kernel": {"a": [0.9], "b": [0.5]},
    "damping": {"kind": "constant", "value": 0.5},
    "domain": {"kind": "box", "lengths": [1.0, 4.0]},
}

FD = {
    "coefficient_a": 1.0,
    "kernel": {"a": [0.9], "b": [0.5]},
    "damping": {"kind": "profile_1d", "samples": [0.3, 0.5, 0.4]},
    "domain": {"kind": "interval_fd", "grid_points": 12},
}


@pytest.fixture
def config(tmp_path):
    def write(doc):
        path = tmp_path / "problem.json"
        path.write_text(json.dumps(doc))
        return str(path)
    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


def test_essential_json(config, capsys):
    code, out = run(capsys, ["essential", "--config", config(GRADED)])
    assert code == 0
    doc = json.loads(out)
    (lo, hi), = doc["intervals"]
    assert lo == pytest.approx(-0.5, abs=1e-12)
    assert hi == pytest.approx(-0.25, abs=1e-12)


def test_eigs_csv(config, capsys):
    code, out = run(capsys, ["eigs", "--config", config(CONSTANT),
                             "--alpha-cap", "200"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) > 1
    for line in lines[1:]:
        re_s, im_s, source, branch, residual, jordan = line.split(",")
        assert source.startswith("m=")
        assert branch in ("real", "complex-pair")
        assert float(residual) < 1e-6
        if branch == "real":
            assert jordan == "true"
            assert float(im_s) == 0.0
        else:
            assert jordan == ""
        # 12 significant digit round trip
        assert re_s == f"{float(re_s):.12g}"


def test_eigs_json(config, capsys):
    code, out = run(capsys, ["eigs", "--config", config(CONSTANT),
                             "--alpha-cap", "200", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"]["eigenvalues"] == len(doc["eigenvalues"])
    assert any(r["jordan_ok"] is True for r in doc["eigenvalues"])


def test_eigs_needs_constant_box(config, capsys):
    code, _ = run(capsys, ["eigs", "--config", config(GRADED)])
    assert code == 2
    code, _ = run(capsys, ["eigs", "--config", config(FD)])
    assert code == 2


def test_enclosure_json(config, capsys):
    code, out = run(capsys, ["enclosure", "--config", config(GRADED)])
    assert code == 0
    doc = json.loads(out)
    region = one_pole_region(ExponentialKernel((1.0,), (1.0,)),
                             DampingBound(0.5, 0.75), 2.0 * np.pi ** 2)
    assert doc["c0"] == pytest.approx(region.c0, abs=1e-12)
    assert doc["c1"] == pytest.approx(region.c1, abs=1e-12)
    assert doc["d0"] == pytest.approx(region.one_pole.d0, abs=1e-12)
    assert doc["d1"] == pytest.approx(region.one_pole.d1, abs=1e-12)
    assert doc["hat_d"] == pytest.approx(region.one_pole.hat_d, abs=1e-12)
    assert doc["counts"]["cloud"] > 0


def test_enclosure_csv_cloud(config, capsys):
    code, out = run(capsys, ["enclosure", "--config", config(CONSTANT),
                             "--alpha-cap", "100", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "re,im,alpha,beta"
    for line in lines[1:]:
        re_s, im_s, alpha_s, beta_s = line.split(",")
        assert float(beta_s) == pytest.approx(0.5 * float(alpha_s), rel=1e-9)


def test_discretize_csv(config, capsys):
    code, out = run(capsys, ["discretize", "--config", config(FD)])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    tail = [line for line in lines if line.startswith("#")]
    assert any(line.startswith("# inside=") for line in tail)
    assert "# outside=0" in tail


def test_discretize_needs_fd_domain(config, capsys):
    code, _ = run(capsys, ["discretize", "--config", config(GRADED)])
    assert code == 2


def test_validate_passes(config, capsys):
    code, out = run(capsys, ["validate", "--config", config(GRADED)])
    assert code == 0
    assert "PASS conjugate_symmetry" in out
    assert "PASS essential_in_interval" in out
    assert "FAIL" not in out


def test_validate_constant_includes_jordan(config, capsys):
    code, out = run(capsys, ["validate", "--config", config(CONSTANT)])
    assert code == 0
    assert "PASS jordan_condition" in out


def test_config_errors_exit_two(config, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    assert main(["essential", "--config", str(bad)]) == 2
    capsys.readouterr()
    assert main(["essential", "--config", str(tmp_path / "none.json")]) == 2
    capsys.readouterr()
    doc = dict(GRADED)
    doc["damping"] = {"kind": "constant", "value": 1.5}
    assert main(["essential", "--config", config(doc)]) == 2


def test_deterministic_output(config, capsys):
    path = config(CONSTANT)
    _, first = run(capsys, ["eigs", "--config", path, "--alpha-cap", "300"])
    _, second = run(capsys, ["eigs", "--config", path, "--alpha-cap", "300"])
    assert first == second


def test_output_file(config, capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out = run(capsys, ["essential", "--config", config(GRADED),
                             "--output", str(target)])
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert "intervals" in doc
