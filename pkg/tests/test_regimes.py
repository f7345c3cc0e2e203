"""
Tests for critical sets, closed-form energies and regime labels

Run from the repository root:
    python -m pytest tests/test_regimes.py
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path so casimir_drag can be imported as a package
repo_dir = Path(__file__).parent.parent
sys.path.insert(0, str(repo_dir))

from casimir_drag.backgrounds import (  # noqa: E402
    cylinder_drag_velocity,
    cylinder_local_metric,
    kerr_equatorial_local_metric,
)
from casimir_drag.casimir import casimir_energy_density, casimir_energy_flat_massive  # noqa: E402
from casimir_drag.errors import CoordinatePatchError, ObserverNotTimelikeError  # noqa: E402
from casimir_drag.oracle import geodesic_residual  # noqa: E402
from casimir_drag.regimes import (  # noqa: E402
    classify_regime,
    cylinder_critical_set,
    cylinder_energy_x,
    cylinder_energy_y,
    kerr_critical_set,
    kerr_energy_ratio,
    kerr_energy_x,
    kerr_energy_y,
    kerr_weak_field_x,
    neutron_star_benchmark,
    weak_field_check,
)
from casimir_drag.types import (  # noqa: E402
    CavityConfig,
    CylinderParams,
    FlatParams,
    KerrParams,
    LengthMode,
    Orientation,
    Regime,
    RegimeLabel,
)

K, R_CYL = 0.25, 1.8
M, A, R_ORBIT = 1.0, 0.7, 3.0


def cavity(orientation, **kwargs):
    return CavityConfig(orientation=orientation, **kwargs)


# Cylinder


def test_cylinder_critical_set_static():
    critical = cylinder_critical_set(0.0, 2.0)
    assert critical.drag == 0.0
    assert critical.bounds == pytest.approx((-1.0, 1.0))
    assert critical.zero_energy == pytest.approx((-1 / math.sqrt(3), 1 / math.sqrt(3)))
    assert critical.sign_flip_unit == pytest.approx((-0.6813, 0.6813), abs=1e-4)
    assert critical.geodesic is None
    assert critical.is_nested()


def test_cylinder_flip_outside_zero_velocity():
    critical = cylinder_critical_set(K, R_CYL)
    for i in (0, 1):
        assert abs(critical.sign_flip_unit[i] - critical.drag) > abs(critical.zero_energy[i] - critical.drag)


def test_cylinder_critical_set_invalid_patch():
    with pytest.raises(CoordinatePatchError):
        cylinder_critical_set(1.0, math.exp(math.pi / 2.0))


def test_cylinder_zero_and_flip_energies():
    critical = cylinder_critical_set(K, R_CYL)
    y = cavity(Orientation.Y, mass=0.2)
    flat = casimir_energy_flat_massive(0.2, 1.0, 0)
    for v in critical.zero_energy:
        assert abs(cylinder_energy_y(K, R_CYL, v, y)) <= 1e-10 * abs(flat)
    for v in critical.sign_flip_unit:
        assert cylinder_energy_y(K, R_CYL, v, y) == pytest.approx(-flat, rel=1e-10)


def test_cylinder_energies_at_drag_velocity():
    v_d = cylinder_drag_velocity(K, R_CYL)
    x = cavity(Orientation.X, length_mode=LengthMode.PROPER)
    y = cavity(Orientation.Y)
    flat = casimir_energy_flat_massive(0.0, 1.0, 0)
    assert cylinder_energy_x(K, R_CYL, v_d, x) == pytest.approx(flat, rel=1e-14)
    assert cylinder_energy_y(K, R_CYL, v_d, y) == pytest.approx(flat, rel=1e-14)


def test_cylinder_ultrarelativistic_limits():
    critical = cylinder_critical_set(K, R_CYL)
    v = critical.bounds[1] - 1e-8
    flat = casimir_energy_flat_massive(0.0, 1.0, 0)
    eps_x = cylinder_energy_x(K, R_CYL, v, cavity(Orientation.X, length_mode=LengthMode.PROPER))
    eps_y = cylinder_energy_y(K, R_CYL, v, cavity(Orientation.Y))
    assert 0 < eps_x / flat < 1e-3
    assert abs(eps_y) > 1e3 * abs(flat)


def test_cylinder_closed_forms_match_pipeline():
    rng = np.random.default_rng(11)
    for _ in range(50):
        k, r = rng.uniform(-0.5, 0.5), rng.uniform(0.5, 3.0)
        v_d = cylinder_drag_velocity(k, r)
        v = v_d + rng.uniform(-0.8, 0.8) * math.sqrt(v_d**2 + 1)
        metric = cylinder_local_metric(CylinderParams(k=k, r=r, v=v))
        for orientation, closed in ((Orientation.X, cylinder_energy_x), (Orientation.Y, cylinder_energy_y)):
            c = cavity(orientation, mass=rng.uniform(0.0, 1.0), plate_separation_L=rng.uniform(0.5, 2.0))
            expected = casimir_energy_density(metric, c).energy_density
            assert closed(k, r, v, c) == pytest.approx(expected, rel=1e-12)


def test_cylinder_energy_out_of_bounds():
    critical = cylinder_critical_set(K, R_CYL)
    with pytest.raises(ObserverNotTimelikeError):
        cylinder_energy_x(K, R_CYL, critical.bounds[1] + 0.1, cavity(Orientation.X))


# Kerr


def test_kerr_critical_set_nesting():
    critical = kerr_critical_set(M, A, R_ORBIT)
    assert critical.is_nested()
    assert critical.sign_flip_unit is None
    lo, hi = critical.geodesic
    assert lo < 0 < hi


def test_kerr_photon_orbit_geodesic_meets_bound():
    critical = kerr_critical_set(1.0, 0.0, 3.0)
    assert critical.geodesic[1] == pytest.approx(critical.bounds[1], rel=1e-13)


@pytest.mark.parametrize("a,r", [(0.0, 6.0), (0.7, 3.0), (-0.5, 4.5), (0.99, 2.0)])
def test_kerr_geodesics_satisfy_circular_orbit_condition(a, r):
    for Omega in kerr_critical_set(1.0, a, r).geodesic:
        assert geodesic_residual(1.0, a, r, Omega) < 1e-10


def test_kerr_zero_energy_angular_velocities():
    critical = kerr_critical_set(M, A, R_ORBIT)
    y = cavity(Orientation.Y)
    for Omega in critical.zero_energy:
        result = casimir_energy_density(kerr_equatorial_local_metric(KerrParams(M, A, R_ORBIT, Omega)), y)
        assert abs(result.energy_density) <= 1e-10 * abs(result.flat_reference_Em)
        assert result.regime is Regime.NULL


def test_kerr_energy_ratio_values():
    critical = kerr_critical_set(M, A, R_ORBIT)
    assert kerr_energy_ratio(M, A, R_ORBIT, critical.drag) == 1.0
    for Omega in critical.zero_energy:
        assert kerr_energy_ratio(M, A, R_ORBIT, Omega) == pytest.approx(0.0, abs=1e-12)
    lo, hi = critical.bounds
    for Omega in np.linspace(lo, hi, 101)[1:-1]:
        assert kerr_energy_ratio(M, A, R_ORBIT, Omega) <= 1.0


def test_kerr_energy_ratio_matches_energies_at_equal_proper_length():
    x = cavity(Orientation.X, length_mode=LengthMode.PROPER)
    y = cavity(Orientation.Y, length_mode=LengthMode.PROPER)
    for Omega in (-0.05, 0.01, 0.12):
        params = KerrParams(M, A, R_ORBIT, Omega)
        metric = kerr_equatorial_local_metric(params)
        eps_x = casimir_energy_density(metric, x).energy_density
        eps_y = casimir_energy_density(metric, y).energy_density
        assert kerr_energy_ratio(M, A, R_ORBIT, Omega) == pytest.approx(eps_y / eps_x, rel=1e-12)


def test_kerr_closed_forms_match_pipeline():
    for Omega in (-0.1, 0.0, 0.05, 0.2):
        params = KerrParams(M, A, R_ORBIT, Omega)
        metric = kerr_equatorial_local_metric(params)
        for orientation, closed in ((Orientation.X, kerr_energy_x), (Orientation.Y, kerr_energy_y)):
            c = cavity(orientation, mass=0.5, plate_separation_L=1.2)
            assert closed(params, c) == pytest.approx(casimir_energy_density(metric, c).energy_density, rel=1e-12)


def test_kerr_weak_field_x_zero_at_zamo():
    critical = kerr_critical_set(M, A, R_ORBIT)
    assert kerr_weak_field_x(M, A, R_ORBIT, critical.drag) == 0.0


def test_weak_field_check_far_from_source():
    critical = kerr_critical_set(1.0, 0.5, 1e4)
    Omega = critical.drag + 1e-3 * (critical.bounds[1] - critical.drag)
    assert weak_field_check(1.0, 0.5, 1e4, Omega)
    assert not weak_field_check(M, A, R_ORBIT, 0.2)


def test_neutron_star_benchmark():
    bench = neutron_star_benchmark()
    assert bench.x == pytest.approx(2.3e-5, rel=0.3)
    assert abs(bench.energy_ratio_y - (1.0 - 3.0 * bench.x)) < 1e-8
    assert bench.weak_field_ok
    assert bench.a == pytest.approx(0.4 * bench.r**2 * bench.Omega)


def test_neutron_star_benchmark_without_spin():
    bench = neutron_star_benchmark(a=0.0)
    assert bench.a == 0.0
    assert 2.3e-5 < bench.x < 4.6e-5
    assert abs(bench.energy_ratio_y - (1.0 - 3.0 * bench.x)) <= 10.0 * bench.x**2


# Classification


def test_classify_regime_examples():
    critical = kerr_critical_set(M, A, R_ORBIT)
    zamo = KerrParams(M, A, R_ORBIT, critical.drag)
    outer = KerrParams(M, A, R_ORBIT, 0.5 * (critical.zero_energy[1] + critical.bounds[1]))
    beyond = KerrParams(M, A, R_ORBIT, critical.bounds[1] + 0.1 * (critical.bounds[1] - critical.drag))
    assert classify_regime(zamo, "y", "dirichlet") is Regime.ATTRACTIVE
    assert classify_regime(outer, Orientation.Y, 0) is Regime.REPULSIVE
    assert classify_regime(beyond, Orientation.Y, 0) is Regime.FORBIDDEN
    assert classify_regime(outer, Orientation.X, 0) is Regime.ATTRACTIVE


def test_classify_regime_flat_and_invalid_patch():
    assert classify_regime(FlatParams(), "x", "mixed") is Regime.REPULSIVE
    invalid = CylinderParams(k=1.0, r=math.exp(math.pi / 2.0))
    assert classify_regime(invalid, "x", "dirichlet") is Regime.FORBIDDEN


def test_regime_labels_are_the_four_documented_values():
    assert {label.value for label in RegimeLabel} == {"Attractive", "Repulsive", "Null", "Forbidden"}
    label = classify_regime(KerrParams(M, A, R_ORBIT, 0.05), "x", "dirichlet")
    assert isinstance(label, RegimeLabel)


def test_classify_regime_follows_zero_energy_interval():
    critical = cylinder_critical_set(K, R_CYL)
    z_lo, z_hi = critical.zero_energy
    lo, hi = critical.bounds
    for v in np.linspace(lo, hi, 81)[1:-1]:
        label = classify_regime(CylinderParams(K, R_CYL, v), Orientation.Y, 0)
        if z_lo < v < z_hi:
            assert label is Regime.ATTRACTIVE
        elif v < z_lo or v > z_hi:
            assert label is Regime.REPULSIVE


def test_mixed_bc_inverts_labels():
    swap = {Regime.ATTRACTIVE: Regime.REPULSIVE, Regime.REPULSIVE: Regime.ATTRACTIVE}
    lo, hi = kerr_critical_set(M, A, R_ORBIT).bounds
    for Omega in np.linspace(lo, hi, 41)[1:-1]:
        params = KerrParams(M, A, R_ORBIT, Omega)
        for orientation in Orientation:
            dirichlet = classify_regime(params, orientation, 0, mass=0.3)
            mixed = classify_regime(params, orientation, 1, mass=0.3)
            assert mixed is swap.get(dirichlet, dirichlet)


def test_zero_crossing_brackets_sign_change():
    critical = kerr_critical_set(M, A, R_ORBIT)
    h = 1e-4 * (critical.bounds[1] - critical.drag)
    y = cavity(Orientation.Y)

    def eps(Omega):
        return casimir_energy_density(kerr_equatorial_local_metric(KerrParams(M, A, R_ORBIT, Omega)), y).energy_density

    for Omega0 in critical.zero_energy:
        assert np.sign(eps(Omega0 - h)) != np.sign(eps(Omega0 + h))
