"""
Critical velocities, closed-form energies and regime labels of the two
dragging backgrounds.

Cylinder (V = v_d^2 + 1, u = v - v_d):
    eps_x = E_m sqrt(1 - u^2 / V)
    eps_y = E_m (V - 3 u^2) sqrt(V) / (V - u^2)^(3/2)

Kerr equatorial orbit (R as in backgrounds.kerr_R):
    eps_x = R E_m,  eps_y = R^-3 (3 R^2 - 2) E_m
"""

import logging
import math
from typing import Optional, Union

from .backgrounds import (
    check_cylinder_patch,
    cylinder_drag_velocity,
    cylinder_is_admissible,
    cylinder_local_metric,
    cylinder_q_exponents,
    cylinder_velocity_bounds,
    kerr_angular_velocity_bounds,
    kerr_auxiliaries,
    kerr_equatorial_local_metric,
    kerr_is_admissible,
    kerr_R,
)
from .casimir import (
    MASSLESS_CROSSOVER,
    NULL_TOL,
    SERIES_REL_TOL,
    casimir_energy_density,
    casimir_energy_flat_massive,
)
from .errors import DomainError, ObserverNotTimelikeError, UsageError
from .types import (
    BoundaryCondition,
    CavityConfig,
    CriticalSet,
    CylinderParams,
    EnergyResult,
    FlatParams,
    KerrParams,
    LengthMode,
    LocalMetric,
    Orientation,
    Regime,
    RegimeLabel,
    WeakFieldBenchmark,
)
from .units import convert_units

logger = logging.getLogger(__name__)

WEAK_FIELD_LIMIT = 1e-3

Background = Union[FlatParams, CylinderParams, KerrParams]


# Cylinder


def cylinder_critical_set(k: float, r: float) -> CriticalSet:
    """
    Drag velocity, bounds, zero-energy velocities v_0+- and the unit sign-flip
    velocities v^_+- (where eps_y = -E_m) of the cylinder background.

    Raises:
        CoordinatePatchError: If cos(2k ln r) <= 0
    """
    check_cylinder_patch(k, r)
    v_d = cylinder_drag_velocity(k, r)
    span = v_d**2 + 1.0
    zero = math.sqrt(span / 3.0)
    flip = math.sqrt((2.0 * math.sqrt(3.0) - 3.0) * span)
    return CriticalSet(
        drag=v_d,
        bounds=cylinder_velocity_bounds(k, r),
        zero_energy=(v_d - zero, v_d + zero),
        sign_flip_unit=(v_d - flip, v_d + flip),
    )


def _cylinder_terms(k: float, r: float, v: float, margin: float):
    c, _ = check_cylinder_patch(k, r)
    if not cylinder_is_admissible(CylinderParams(k=k, r=r, v=v), margin):
        lo, hi = cylinder_velocity_bounds(k, r)
        raise ObserverNotTimelikeError(
            f"observer not timelike: v={v} outside ({lo:.17g}, {hi:.17g})"
        )
    v_d = cylinder_drag_velocity(k, r)
    span = v_d**2 + 1.0
    u2 = (v - v_d) ** 2
    return c, span, u2, span - u2


def cylinder_energy_x(
    k: float,
    r: float,
    v: float,
    config: CavityConfig,
    margin: float = 1e-12,
    rel_tol: float = SERIES_REL_TOL,
    crossover: float = MASSLESS_CROSSOVER,
) -> float:
    """Closed-form x-orientation energy of the moving cylinder apparatus"""
    c, span, u2, reduced = _cylinder_terms(k, r, v, margin)
    L_p = config.plate_separation_L
    if config.length_mode is LengthMode.COORDINATE:
        q_minus, _ = cylinder_q_exponents(k)
        L_p *= r**q_minus / math.sqrt(c * reduced)
    flat = casimir_energy_flat_massive(config.mass, L_p, config.b, rel_tol, crossover)
    return flat * math.sqrt(reduced / span)


def cylinder_energy_y(
    k: float,
    r: float,
    v: float,
    config: CavityConfig,
    margin: float = 1e-12,
    rel_tol: float = SERIES_REL_TOL,
    crossover: float = MASSLESS_CROSSOVER,
) -> float:
    """Closed-form y-orientation energy; the proper separation equals L since g_yy = -1"""
    _, span, u2, reduced = _cylinder_terms(k, r, v, margin)
    flat = casimir_energy_flat_massive(
        config.mass, config.plate_separation_L, config.b, rel_tol, crossover
    )
    return flat * (span - 3.0 * u2) * math.sqrt(span) / reduced**1.5


# Kerr


def kerr_critical_set(M: float, a: float, r: float) -> CriticalSet:
    """
    Drag angular velocity, bounds, zero-energy angular velocities
    Omega_0+- = omega_d +- sqrt(Delta/3) r^2 / A and the circular geodesics
    -+sqrt(M) / (r^(3/2) -+ a sqrt(M)).

    Raises:
        HorizonError: If r is not outside the horizon
    """
    _, delta, big_a = kerr_auxiliaries(M, a, r)
    omega_d = 2.0 * M * a * r / big_a
    zero = math.sqrt(delta / 3.0) * r**2 / big_a
    root_m = math.sqrt(M)
    r32 = r**1.5
    return CriticalSet(
        drag=omega_d,
        bounds=kerr_angular_velocity_bounds(M, a, r),
        zero_energy=(omega_d - zero, omega_d + zero),
        geodesic=(-root_m / (r32 - a * root_m), root_m / (r32 + a * root_m)),
    )


def kerr_energy_x(
    params: KerrParams,
    config: CavityConfig,
    margin: float = 1e-12,
    rel_tol: float = SERIES_REL_TOL,
    crossover: float = MASSLESS_CROSSOVER,
) -> float:
    """R E_m with L_p = L sqrt(A) / (r^2 R)"""
    R = kerr_R(params, margin)
    L_p = config.plate_separation_L
    if config.length_mode is LengthMode.COORDINATE:
        _, _, big_a = kerr_auxiliaries(params.M, params.a, params.r)
        L_p *= math.sqrt(big_a) / (params.r**2 * R)
    return R * casimir_energy_flat_massive(config.mass, L_p, config.b, rel_tol, crossover)


def kerr_energy_y(
    params: KerrParams,
    config: CavityConfig,
    margin: float = 1e-12,
    rel_tol: float = SERIES_REL_TOL,
    crossover: float = MASSLESS_CROSSOVER,
) -> float:
    """R^-3 (3 R^2 - 2) E_m with L_p = L r / sqrt(Delta)"""
    R = kerr_R(params, margin)
    L_p = config.plate_separation_L
    if config.length_mode is LengthMode.COORDINATE:
        _, delta, _ = kerr_auxiliaries(params.M, params.a, params.r)
        L_p *= params.r / math.sqrt(delta)
    flat = casimir_energy_flat_massive(config.mass, L_p, config.b, rel_tol, crossover)
    return (3.0 * R**2 - 2.0) / R**3 * flat


def _kerr_shift_squared_ratio(M: float, a: float, r: float, Omega: float, margin: float) -> float:
    """A^2 delta^2 / (r^4 Delta), i.e. 1 - R^2"""
    params = KerrParams(M=M, a=a, r=r, Omega=Omega)
    _, delta, big_a = kerr_auxiliaries(M, a, r)
    if not kerr_is_admissible(params, margin):
        lo, hi = kerr_angular_velocity_bounds(M, a, r)
        raise ObserverNotTimelikeError(
            f"observer not timelike: Omega={Omega} outside ({lo:.17g}, {hi:.17g})"
        )
    shift = Omega - 2.0 * M * a * r / big_a
    return (big_a * shift) ** 2 / (r**4 * delta)


def kerr_energy_ratio(M: float, a: float, r: float, Omega: float, margin: float = 1e-12) -> float:
    """
    eps_y / eps_x = 1 - g (1 + 2 g), g = (A delta)^2 / (Delta r^4 - (A delta)^2),
    for plates at equal proper separation.
    """
    y = _kerr_shift_squared_ratio(M, a, r, Omega, margin)
    g = y / (1.0 - y)
    return 1.0 - g * (1.0 + 2.0 * g)


def kerr_weak_field_x(M: float, a: float, r: float, Omega: float, margin: float = 1e-12) -> float:
    """x = 1 - R, with R = 1 - x + O(x^2) in the weak field"""
    y = _kerr_shift_squared_ratio(M, a, r, Omega, margin)
    # 1 - sqrt(1 - y) without cancellation
    return y / (1.0 + math.sqrt(1.0 - y))


def weak_field_check(M: float, a: float, r: float, Omega: float, margin: float = 1e-12) -> bool:
    """True when x < 1e-3 and |eps_y/E_m - (1 - 3x)| <= 10 x^2"""
    x = kerr_weak_field_x(M, a, r, Omega, margin)
    if not x < WEAK_FIELD_LIMIT:
        return False
    R = 1.0 - x
    ratio = (3.0 * R**2 - 2.0) / R**3
    return abs(ratio - (1.0 - 3.0 * x)) <= 10.0 * x**2


def neutron_star_benchmark(
    mass_solar: float = 1.4,
    radius_m: float = 1.0e4,
    omega_si: float = 190.0,
    a: Optional[float] = None,
) -> WeakFieldBenchmark:
    """
    Apparatus co-rotating with the surface of a slowly rotating neutron star.

    Args:
        mass_solar: Stellar mass in solar masses
        radius_m: Orbit radius in metres
        omega_si: Angular velocity in rad/s
        a: Spin parameter in metres. None takes J = (2/5) M r^2 Omega of a
            uniform-density sphere, so a = (2/5) r^2 Omega in geometric units.

    Returns:
        WeakFieldBenchmark with x = 1 - R and eps_y / E_m
    """
    M = convert_units(mass_solar, "mass_solar", "to_geometric")
    r = convert_units(radius_m, "length_m", "to_geometric")
    Omega = convert_units(omega_si, "angular_velocity_si", "to_geometric")
    if a is None:
        a = 0.4 * r**2 * Omega
    params = KerrParams(M=M, a=a, r=r, Omega=Omega)
    x = kerr_weak_field_x(M, a, r, Omega)
    R = 1.0 - x
    ratio_y = (3.0 * R**2 - 2.0) / R**3
    logger.info("neutron star benchmark: M=%.6g m, a=%.6g m, x=%.6g", M, a, x)
    return WeakFieldBenchmark(
        M=params.M,
        a=params.a,
        r=params.r,
        Omega=params.Omega,
        x=x,
        R=R,
        energy_ratio_y=ratio_y,
        weak_field_ok=weak_field_check(M, a, r, Omega),
    )


# Classification


def background_local_metric(background: Background, margin: float = 1e-12) -> LocalMetric:
    """Comoving-frame metric for any supported background parameter set"""
    if isinstance(background, FlatParams):
        return LocalMetric.minkowski()
    if isinstance(background, CylinderParams):
        return cylinder_local_metric(background, margin)
    if isinstance(background, KerrParams):
        return kerr_equatorial_local_metric(background, margin)
    raise UsageError(f"unsupported background {type(background).__name__}")


def background_energy(
    background: Background,
    cavity: CavityConfig,
    null_tol: float = NULL_TOL,
    margin: float = 1e-12,
    rel_tol: float = SERIES_REL_TOL,
    crossover: float = MASSLESS_CROSSOVER,
) -> EnergyResult:
    """
    Energy density of cavity in background.

    Raises:
        DomainError: If the apparatus is not an allowed observer
    """
    metric = background_local_metric(background, margin)
    return casimir_energy_density(metric, cavity, null_tol, rel_tol, crossover)


def classify_regime(
    background: Background,
    orientation: Union[Orientation, str],
    bc: Union[BoundaryCondition, str, int],
    mass: float = 0.0,
    plate_separation_L: float = 1.0,
    null_tol: float = NULL_TOL,
    margin: float = 1e-12,
) -> RegimeLabel:
    """
    Regime label of the apparatus; Forbidden instead of an error whenever the
    apparatus is not an allowed observer.
    """
    cavity = CavityConfig(
        orientation=orientation, bc=bc, mass=mass, plate_separation_L=plate_separation_L
    )
    try:
        return background_energy(background, cavity, null_tol, margin).regime
    except DomainError as e:
        logger.debug("classify_regime: %s", e)
        return Regime.FORBIDDEN
