"""
Tests for the flat and curved-space Casimir energy

Run from the repository root:
    python -m pytest tests/test_casimir.py
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
    kerr_angular_velocity_bounds,
    kerr_drag_angular_velocity,
    kerr_equatorial_local_metric,
    kerr_R,
)
from casimir_drag.casimir import (  # noqa: E402
    casimir_energy_density,
    casimir_energy_flat_massive,
    casimir_energy_flat_massless,
    classify_energy,
    energy_prefactor,
    repulsion_condition,
    sign_flip_condition,
)
from casimir_drag.errors import SeriesRangeError, UsageError  # noqa: E402
from casimir_drag.regimes import kerr_critical_set  # noqa: E402
from casimir_drag.types import (  # noqa: E402
    CavityConfig,
    KerrParams,
    LengthMode,
    LocalMetric,
    Orientation,
    Regime,
)

M, A, R_ORBIT = 1.0, 0.7, 3.0


def kerr_metric(Omega):
    return kerr_equatorial_local_metric(KerrParams(M=M, a=A, r=R_ORBIT, Omega=Omega))


def test_flat_massless_values():
    assert casimir_energy_flat_massless(1.0, 0) == pytest.approx(-math.pi**2 / 1440.0, rel=1e-14)
    assert casimir_energy_flat_massless(1.0, 1) == pytest.approx(7.0 * math.pi**2 / 11520.0, rel=1e-14)
    assert casimir_energy_flat_massless(2.0, 0) == pytest.approx(-math.pi**2 / (1440.0 * 16.0))


def test_flat_massless_rejects_bad_input():
    with pytest.raises(UsageError):
        casimir_energy_flat_massless(0.0, 0)
    with pytest.raises(UsageError):
        casimir_energy_flat_massless(1.0, 2)


def test_massive_zero_mass_is_massless():
    assert casimir_energy_flat_massive(0.0, 1.3, 1) == casimir_energy_flat_massless(1.3, 1)


def test_massive_continuity_to_massless():
    ratio = casimir_energy_flat_massive(1e-3, 1.0, 0) / casimir_energy_flat_massless(1.0, 0)
    assert abs(ratio - 1.0) < 1e-5


def test_crossover_uses_massless_form():
    assert casimir_energy_flat_massive(1e-8, 1.0, 0) == casimir_energy_flat_massless(1.0, 0)
    with pytest.raises(SeriesRangeError):
        casimir_energy_flat_massive(1e-8, 1.0, 0, crossover=0.0)


def test_massive_signs_and_monotonic_in_mass():
    masses = np.linspace(0.01, 3.0, 60)
    dirichlet = np.array([casimir_energy_flat_massive(m, 1.0, 0) for m in masses])
    mixed = np.array([casimir_energy_flat_massive(m, 1.0, 1) for m in masses])
    assert np.all(dirichlet < 0)
    assert np.all(mixed > 0)
    assert np.all(np.diff(np.abs(dirichlet)) < 0)
    assert np.all(np.diff(np.abs(mixed)) < 0)


def test_massive_rejects_negative_mass():
    with pytest.raises(UsageError):
        casimir_energy_flat_massive(-1.0, 1.0, 0)


def test_massive_energy_underflows_to_null_beyond_threshold():
    # 2 m L_p = 698 still resolves K_2, 702 does not
    below = casimir_energy_flat_massive(349.0, 1.0, 0)
    assert below < 0
    assert classify_energy(below, below) is Regime.ATTRACTIVE
    above = casimir_energy_flat_massive(351.0, 1.0, 0)
    assert above == 0.0
    assert classify_energy(above, above) is Regime.NULL


def test_minkowski_energy_is_flat_energy():
    for bc, regime in (("dirichlet", Regime.ATTRACTIVE), ("mixed", Regime.REPULSIVE)):
        cavity = CavityConfig(orientation=Orientation.Y, bc=bc, mass=0.4, plate_separation_L=1.5)
        result = casimir_energy_density(LocalMetric.minkowski(), cavity)
        assert result.prefactor == 1.0
        assert result.energy_density == result.flat_reference_Em
        assert result.proper_length == 1.5
        assert result.regime is regime


def test_prefactor_in_terms_of_R():
    omega_d = kerr_drag_angular_velocity(M, A, R_ORBIT)
    _, hi = kerr_angular_velocity_bounds(M, A, R_ORBIT)
    Omega = omega_d + 0.6 * (hi - omega_d)
    R = kerr_R(KerrParams(M=M, a=A, r=R_ORBIT, Omega=Omega))
    metric = kerr_metric(Omega)
    assert energy_prefactor(metric, Orientation.X) == pytest.approx(R, rel=1e-13)
    assert energy_prefactor(metric, Orientation.Y) == pytest.approx((3 * R**2 - 2) / R**3, rel=1e-12)


def test_energy_is_prefactor_times_flat_energy():
    cavity = CavityConfig(orientation=Orientation.Y, mass=0.3, plate_separation_L=0.8)
    result = casimir_energy_density(kerr_metric(0.1), cavity)
    assert result.energy_density == pytest.approx(result.prefactor * result.flat_reference_Em, rel=1e-15)


def test_repulsion_and_sign_flip_conditions():
    critical = kerr_critical_set(M, A, R_ORBIT)
    zamo = kerr_metric(critical.drag)
    outside = kerr_metric(0.5 * (critical.zero_energy[1] + critical.bounds[1]))
    assert not repulsion_condition(zamo, Orientation.X)
    assert not repulsion_condition(outside, Orientation.X)
    assert repulsion_condition(zamo, Orientation.Y)
    assert not repulsion_condition(outside, Orientation.Y)
    assert sign_flip_condition(outside, Orientation.Y)
    assert not sign_flip_condition(outside, Orientation.X)
    assert not sign_flip_condition(zamo, Orientation.Y)


def test_sign_flipped_result_flag():
    critical = kerr_critical_set(M, A, R_ORBIT)
    metric = kerr_metric(0.5 * (critical.zero_energy[1] + critical.bounds[1]))
    result = casimir_energy_density(metric, CavityConfig(orientation=Orientation.Y))
    assert result.sign_flipped
    assert result.regime is Regime.REPULSIVE


def test_classify_energy_null_band():
    assert classify_energy(-1e-12, -1.0) is Regime.NULL
    assert classify_energy(-1e-6, -1.0) is Regime.ATTRACTIVE
    assert classify_energy(1e-6, -1.0) is Regime.REPULSIVE
    assert classify_energy(0.0, 0.0) is Regime.NULL


# Dependence on the transverse metric components

STRETCHED = LocalMetric(g_tt=0.8, g_tx=0.3, g_xx=-1.7, g_yy=-1.2, g_zz=-0.9)


@pytest.mark.parametrize("orientation", list(Orientation))
def test_energy_ignores_g_zz(orientation):
    cavity = CavityConfig(orientation=orientation, mass=0.4, plate_separation_L=1.1)
    base = casimir_energy_density(STRETCHED, cavity).energy_density
    for g_zz in (-0.2, -3.1, -40.0):
        other = LocalMetric(STRETCHED.g_tt, STRETCHED.g_tx, STRETCHED.g_xx, STRETCHED.g_yy, g_zz)
        assert casimir_energy_density(other, cavity).energy_density == pytest.approx(base, rel=1e-15)


def test_radial_energy_scales_with_g_yy_through_proper_length():
    doubled = LocalMetric(STRETCHED.g_tt, STRETCHED.g_tx, STRETCHED.g_xx, 2.0 * STRETCHED.g_yy, STRETCHED.g_zz)
    radial = CavityConfig(orientation=Orientation.Y, mass=0.0)
    along = CavityConfig(orientation=Orientation.X, mass=0.0)
    ratio = (
        casimir_energy_density(doubled, radial).energy_density
        / casimir_energy_density(STRETCHED, radial).energy_density
    )
    assert ratio == pytest.approx(0.25, rel=1e-13)
    assert casimir_energy_density(doubled, along).energy_density == pytest.approx(
        casimir_energy_density(STRETCHED, along).energy_density, rel=1e-15
    )


# Orientation comparison across the admissible band

def kerr_band(n=51):
    lo, hi = kerr_angular_velocity_bounds(M, A, R_ORBIT)
    return np.linspace(lo, hi, n)[1:-1]


@pytest.mark.parametrize("mass", [0.0, 0.2])
def test_radial_energy_never_below_along_drag(mass):
    for Omega in kerr_band():
        metric = kerr_metric(Omega)
        energies = {}
        for orientation in Orientation:
            cavity = CavityConfig(
                orientation=orientation, mass=mass, plate_separation_L=1.0, length_mode=LengthMode.PROPER
            )
            energies[orientation] = casimir_energy_density(metric, cavity)
        x, y = energies[Orientation.X], energies[Orientation.Y]
        assert x.flat_reference_Em == y.flat_reference_Em
        assert y.energy_density >= x.energy_density - 1e-12 * abs(x.flat_reference_Em)


def test_radial_sign_follows_three_R_squared_minus_two():
    cavity = CavityConfig(orientation=Orientation.Y, mass=0.2, plate_separation_L=0.9)
    checked = 0
    for Omega in kerr_band():
        R = kerr_R(KerrParams(M=M, a=A, r=R_ORBIT, Omega=Omega))
        factor = 3 * R**2 - 2
        if abs(factor) < 1e-6:
            continue
        result = casimir_energy_density(kerr_metric(Omega), cavity)
        assert np.sign(result.energy_density) == np.sign(factor) * np.sign(result.flat_reference_Em)
        checked += 1
    assert checked >= 45
