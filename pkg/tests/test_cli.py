"""
Tests for the basis-casimir command line

Run from the repository root:
    python -m pytest tests/test_cli.py
"""

import json
import math
import sys
from pathlib import Path

import pytest
from scipy import constants

# Add parent directory to path so casimir_drag can be imported as a package
repo_dir = Path(__file__).parent.parent
sys.path.insert(0, str(repo_dir))

from casimir_drag.backgrounds import kerr_drag_angular_velocity  # noqa: E402
from casimir_drag.cli import main  # noqa: E402


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_flat_energy(capsys):
    code, out, _ = run(capsys, "energy", "--background", "flat")
    assert code == 0
    document = json.loads(out)
    assert document["energy_density"] == pytest.approx(-(math.pi**2) / 1440.0, rel=1e-12)
    assert document["regime"] == "Attractive"
    assert document["critical_set"] is None
    assert document["units"] == "geometric"


def test_flat_energy_in_si(capsys):
    code, out, _ = run(capsys, "energy", "--background", "flat", "--units", "si", "--L", "1e-6")
    assert code == 0
    expected = -(math.pi**2) * constants.hbar * constants.c / (1440.0 * 1e-24)
    assert json.loads(out)["energy_density"] == pytest.approx(expected, rel=1e-10)


def test_zamo_y_prefactor(capsys):
    omega_d = kerr_drag_angular_velocity(1.0, 0.7, 3.0)
    code, out, _ = run(
        capsys,
        "energy", "--background", "kerr", "--M", "1", "--a", "0.7", "--r", "3",
        "--omega", repr(omega_d), "--orientation", "y",
    )
    assert code == 0
    document = json.loads(out)
    assert document["prefactor"] == pytest.approx(1.0, abs=1e-12)
    assert document["sign_flipped"] is False
    assert "geo_plus" in document["critical_set"]


def test_observer_outside_bounds(capsys):
    code, out, err = run(
        capsys, "energy", "--background", "kerr", "--M", "1", "--a", "0.7", "--r", "3", "--omega", "0.5"
    )
    assert code == 2
    assert out == ""
    assert json.loads(err.strip().splitlines()[-1])["error"]["code"] == "OBSERVER_NOT_TIMELIKE"


def test_missing_background_arguments(capsys):
    code, _, err = run(capsys, "energy", "--background", "kerr", "--r", "3")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error"]["code"] == "USAGE"


def test_critical_cylinder(capsys):
    code, out, _ = run(capsys, "critical", "--background", "cylinder", "--k", "0", "--r", "2")
    assert code == 0
    document = json.loads(out)
    assert document["drag"] == 0.0
    assert document["bound_minus"] == pytest.approx(-1.0)
    assert document["bound_plus"] == pytest.approx(1.0)
    assert document["zero_plus"] == pytest.approx(1.0 / math.sqrt(3.0))
    assert document["flip_plus"] == pytest.approx(math.sqrt(2.0 * math.sqrt(3.0) - 3.0))


def test_critical_schwarzschild_geodesic_meets_bound(capsys):
    code, out, _ = run(capsys, "critical", "--background", "kerr", "--M", "1", "--a", "0", "--r", "3")
    assert code == 0
    document = json.loads(out)
    assert document["geo_plus"] == pytest.approx(document["bound_plus"], rel=1e-12)
    assert document["geo_minus"] == pytest.approx(document["bound_minus"], rel=1e-12)


def test_critical_flat_is_usage_error(capsys):
    code, _, err = run(capsys, "critical", "--background", "flat")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error"]["code"] == "USAGE"


def test_sweep(capsys, tmp_path):
    output = tmp_path / "fig.csv"
    code, out, _ = run(
        capsys,
        "sweep", "--background", "kerr", "--M", "1", "--a", "0.7",
        "--r-min", "3", "--r-max", "6", "--r-steps", "2",
        "--omega-min", "0", "--omega-max", "0.2", "--omega-steps", "2",
        "--output", str(output),
    )
    assert code == 0
    document = json.loads(out)
    assert document["rows"] == 4
    assert len(output.read_text(encoding="utf-8").splitlines()) == 5
    curves = json.loads((tmp_path / "fig.curves.json").read_text(encoding="utf-8"))
    assert curves["metadata"]["velocity"] == "omega"
    assert len(curves["curves"]) == 2


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--seed", "7", "--samples", "2")
    second = run(capsys, "verify", "--seed", "7", "--samples", "2")
    assert first[0] == 0
    assert first[1] == second[1]
    assert first[1].strip().splitlines()[-1] == "18/18 checks passed"


def test_verify_needs_samples(capsys):
    code, _, err = run(capsys, "verify", "--samples", "0")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error"]["code"] == "USAGE"


def test_convert(capsys):
    code, out, _ = run(capsys, "convert", "--kind", "mass_solar", "--value", "1")
    assert code == 0
    document = json.loads(out)
    assert document["result"] == pytest.approx(1476.6, rel=1e-4)
    assert document["direction"] == "to_geometric"


def test_unknown_log_level(capsys):
    code, _, _ = run(capsys, "--log-level", "chatty", "convert", "--kind", "length_m", "--value", "1")
    assert code == 2
