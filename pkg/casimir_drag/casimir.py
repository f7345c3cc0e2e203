"""
Casimir energy density of a massive scalar field between parallel plates.

The curved-space energy is the flat-space massive energy E_m evaluated at the
proper plate separation, times an orientation-dependent factor of the local
metric:

    eps_xi = (g~ / (g_tt g_xx))^((4 G_xi - 1) / 2) (1 + 3 G_xi g_tx^2 / g~) E_m

In terms of R^2 = g_tt g_xx / g~ the factor is R for the x-orientation and
R^-3 (3 R^2 - 2) for the y-orientation.
"""

import logging
import math

from .errors import UsageError
from .geometry import g_tilde, proper_length
from .specfun import casimir_series
from .types import CavityConfig, EnergyResult, LocalMetric, Orientation, Regime

logger = logging.getLogger(__name__)

NULL_TOL = 1e-9
SERIES_REL_TOL = 1e-10
MASSLESS_CROSSOVER = 1e-6


def _check_b(b: int) -> int:
    if b not in (0, 1):
        raise UsageError(f"b must be 0 (Dirichlet) or 1 (mixed), got {b}")
    return int(b)


def _check_length(L_p: float) -> float:
    if not (math.isfinite(L_p) and L_p > 0):
        raise UsageError(f"proper length must be positive, got {L_p}")
    return float(L_p)


def casimir_energy_flat_massless(L_p: float, b: int) -> float:
    """-(-7/8)^b pi^2 / (1440 L_p^4)"""
    b = _check_b(b)
    L_p = _check_length(L_p)
    return -((-7.0 / 8.0) ** b) * math.pi**2 / (1440.0 * L_p**4)


def casimir_energy_flat_massive(
    m: float,
    L_p: float,
    b: int,
    rel_tol: float = SERIES_REL_TOL,
    crossover: float = MASSLESS_CROSSOVER,
) -> float:
    """
    Flat-space Casimir energy of a massive scalar,
    E_m = -m^2 / (8 pi^2 L_p^2) sum_n (-1)^(b n) n^-2 K_2(2 m L_p n).

    Args:
        m: Field mass (inverse length), m >= 0
        L_p: Proper plate separation
        b: 0 for Dirichlet, 1 for mixed boundary conditions
        rel_tol: Relative tolerance of the Bessel series
        crossover: Below 2 m L_p = crossover the massless closed form is used;
            the neglected relative difference is about 0.38 (2 m L_p)^2.
            0 disables the crossover.

    Returns:
        E_m. Every series term is exactly zero once 2 m L_p exceeds
        K2_UNDERFLOW_THRESHOLD (m L_p > 350), so E_m is then -0.0 and
        classify_energy labels the cavity Null. Below that edge E_m is tiny
        but keeps its sign.

    Raises:
        SeriesRangeError: If the crossover is disabled and 2 m L_p is too small
    """
    b = _check_b(b)
    L_p = _check_length(L_p)
    if not (math.isfinite(m) and m >= 0):
        raise UsageError(f"mass must be non-negative, got {m}")
    x = 2.0 * m * L_p
    if m == 0 or x < crossover:
        if m > 0:
            logger.debug("2 m L_p = %g below crossover %g: massless form", x, crossover)
        return casimir_energy_flat_massless(L_p, b)
    series = casimir_series(x, b, rel_tol)
    return -(m**2) / (8.0 * math.pi**2 * L_p**2) * series.value


def energy_prefactor(metric: LocalMetric, orientation: Orientation) -> float:
    """Metric-dependent factor multiplying E_m"""
    gt = g_tilde(metric)
    g_xi = orientation.g_xi
    ratio = gt / (metric.g_tt * metric.g_xx)
    return ratio ** ((4 * g_xi - 1) / 2.0) * (1.0 + 3.0 * g_xi * metric.g_tx**2 / gt)


def classify_energy(energy: float, flat_reference_Em: float, null_tol: float = NULL_TOL) -> Regime:
    """Attractive for negative energy, Repulsive for positive, Null within null_tol |E_m|"""
    if abs(energy) <= null_tol * abs(flat_reference_Em):
        return Regime.NULL
    return Regime.ATTRACTIVE if energy < 0 else Regime.REPULSIVE


def repulsion_condition(metric: LocalMetric, orientation: Orientation) -> bool:
    """
    g_tx^2 < -G_xi g_tt g_xx / 2.

    True when the y-orientation factor 3 R^2 - 2 is positive, i.e. the energy
    keeps the flat-space sign. Always false for the x-orientation.
    """
    return metric.g_tx**2 < -orientation.g_xi * metric.g_tt * metric.g_xx / 2.0


def sign_flip_condition(metric: LocalMetric, orientation: Orientation) -> bool:
    """True when the energy has the sign opposite to E_m (y-orientation only)"""
    return orientation is Orientation.Y and metric.g_tx**2 > -metric.g_tt * metric.g_xx / 2.0


def casimir_energy_density(
    metric: LocalMetric,
    config: CavityConfig,
    null_tol: float = NULL_TOL,
    rel_tol: float = SERIES_REL_TOL,
    crossover: float = MASSLESS_CROSSOVER,
) -> EnergyResult:
    """
    Casimir energy density in the local frame described by metric.

    Args:
        metric: Comoving-frame metric of the apparatus
        config: Cavity orientation, boundary condition, mass and separation
        null_tol: Relative threshold for the Null regime label
        rel_tol: Relative tolerance of the Bessel series
        crossover: Massless crossover of casimir_energy_flat_massive

    Returns:
        EnergyResult with energy_density = prefactor * flat_reference_Em
    """
    L_p = proper_length(metric, config)
    flat = casimir_energy_flat_massive(config.mass, L_p, config.b, rel_tol, crossover)
    prefactor = energy_prefactor(metric, config.orientation)
    energy = prefactor * flat
    return EnergyResult(
        energy_density=energy,
        flat_reference_Em=flat,
        prefactor=prefactor,
        regime=classify_energy(energy, flat, null_tol),
        proper_length=L_p,
        sign_flipped=sign_flip_condition(metric, config.orientation),
    )
