"""Smoke tests for the Python bindings and the CLI.

The extension module is imported from the build tree when the package is not
installed; set KNLQ_MODULE_DIR to point at the directory containing the
compiled `_knlq` module (the CMake build directory works).
"""

import json
import math
import os
import subprocess
import sys

import pytest

MODULE_DIR = os.environ.get(
    "KNLQ_MODULE_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "build"),
)
sys.path.insert(0, os.path.abspath(MODULE_DIR))

knlq = pytest.importorskip("_knlq")


def test_sample_shape_and_determinism():
    a = knlq.sample("gaussian", 2.0, 3, 10, seed=1)
    b = knlq.sample("gaussian", 2.0, 3, 10, seed=1)
    c = knlq.sample("gaussian", 2.0, 3, 10, seed=2)
    assert a.shape == (10, 3)
    assert (a == b).all()
    assert (a != c).any()


def test_support_value_hand_example():
    pts = [[1.0, 0.0], [0.0, 1.0]]
    v = knlq.support_value(pts, [1.0, 0.0], ell=2, q=2.0)
    assert abs(v - 1.0 / math.sqrt(2.0)) < 1e-12


def test_orderstat_power_mean():
    assert abs(knlq.orderstat_power_mean([3.0, 4.0], 2, 2.0)
               - math.sqrt(12.5)) < 1e-12


def test_predictor_and_mean_width():
    value, regime = knlq.predictor("gaussian", 2.0, 16, 8103, 1, 1.0)
    assert abs(value - 3.0) < 1e-3
    assert regime == "small-q"
    r = knlq.mean_width("gaussian", 2.0, 8, 64, 1, 1.0,
                        replicates=20, directions=8, seed=5)
    assert r["value"] > 0
    assert 1 / 8 < r["ratio"] < 8


def test_gaussian_orlicz_breakpoint():
    # q=2, ell=1: M(t*) = e^{-2} at t* = 1.
    assert abs(knlq.gaussian_orlicz(2.0, 1, 1.0) - math.exp(-2.0)) < 1e-12
    assert abs(knlq.luxemburg_norm([0.0, 0.0], 2.0, 1)) == 0.0


def test_run_sweep_json_deterministic():
    cfg = json.dumps({
        "model": "gaussian",
        "n": [4], "N": [16], "ell": [1, 16], "q": [1.0],
        "mc": {"replicates": 5, "directions": 4},
        "seed": 3,
    })
    a = knlq.run_sweep_json(cfg)
    b = knlq.run_sweep_json(cfg)
    assert a == b
    rows = json.loads(a)["rows"]
    assert len(rows) == 2
    assert rows[0]["ell"] == 1


def test_verify_suite():
    rep = json.loads(knlq.verify("pathwise", 1))
    assert all(c["pass"] for c in rep["checks"])


def test_invalid_arguments_raise():
    with pytest.raises(Exception):
        knlq.orderstat_power_mean([], 1, 1.0)
    with pytest.raises(ValueError):
        knlq.run_sweep_json("{}")


@pytest.mark.skipif("KNLQ_CLI" not in os.environ, reason="CLI path not set")
def test_cli_roundtrip(tmp_path):
    cli = os.environ["KNLQ_CLI"]
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "model": "gaussian",
        "n": [4], "N": [16], "ell": [1], "q": [1.0],
        "mc": {"replicates": 5, "directions": 4},
        "seed": 11,
    }))
    out = subprocess.run([cli, "sweep", str(cfg)],
                         capture_output=True, text=True, check=True)
    lines = out.stdout.strip().splitlines()
    assert lines[0].startswith("model,p,n,N,ell,q")
    assert len(lines) == 2
    bad = subprocess.run([cli, "sweep", "/nonexistent.json"],
                         capture_output=True, text=True)
    assert bad.returncode == 3
    unk = subprocess.run([cli, "verify", "bogus"],
                         capture_output=True, text=True)
    assert unk.returncode == 2
