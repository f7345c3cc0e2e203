"""
Algebra of the comoving-frame metric: derived scalars, mode spectrum and
normalization, proper length of the plate separation.

Inverse components come analytically from the (t, x) block:
    g^tt = g_xx / g~,  g^tx = -g_tx / g~,  g^xx = g_tt / g~,
with g~ = g_tt g_xx - g_tx^2 < 0.
"""

import math
from typing import Tuple

from .errors import MetricInvariantError, ModeBranchError, UsageError
from .types import CavityConfig, LengthMode, LocalMetric, Orientation


def g_tilde(metric: LocalMetric) -> float:
    """g~ = g_tt g_xx - g_tx^2, negative for every valid metric"""
    value = metric.g_tt * metric.g_xx - metric.g_tx**2
    if not value < 0:
        raise MetricInvariantError(f"g~ must be negative, got {value}", component="g_tx")
    return value


def determinant(metric: LocalMetric) -> float:
    """Full determinant g = g_yy g_zz g~"""
    return metric.g_yy * metric.g_zz * g_tilde(metric)


def inverse_components(metric: LocalMetric) -> Tuple[float, float, float, float, float]:
    """(g^tt, g^tx, g^xx, g^yy, g^zz)"""
    gt = g_tilde(metric)
    return (
        metric.g_xx / gt,
        -metric.g_tx / gt,
        metric.g_tt / gt,
        1.0 / metric.g_yy,
        1.0 / metric.g_zz,
    )


def drag_parameter_K(metric: LocalMetric) -> float:
    """K = g^tx / g^xx = -g_tx / g_tt"""
    return -metric.g_tx / metric.g_tt


def proper_length(metric: LocalMetric, config: CavityConfig) -> float:
    """
    Proper plate separation L sqrt(-1/g^xixi).

    x-orientation: L sqrt(-g~/g_tt); y-orientation: L sqrt(-g_yy).
    With LengthMode.PROPER the configured separation is returned unchanged.
    """
    if config.length_mode is LengthMode.PROPER:
        return config.plate_separation_L
    if config.orientation is Orientation.X:
        return config.plate_separation_L * math.sqrt(-g_tilde(metric) / metric.g_tt)
    return config.plate_separation_L * math.sqrt(-metric.g_yy)


def mode_frequency_squared(
    metric: LocalMetric, k_x: float, k_y: float, k_z: float, mass: float
) -> float:
    """omega^2 = -g_tt ((g_tt/g~) k_x^2 + k_y^2/g_yy + k_z^2/g_zz - m^2)"""
    if mass < 0:
        raise UsageError(f"mass must be non-negative, got {mass}")
    gt = g_tilde(metric)
    return -metric.g_tt * (
        (metric.g_tt / gt) * k_x**2 + k_y**2 / metric.g_yy + k_z**2 / metric.g_zz - mass**2
    )


def discrete_wavenumber(n: int, config: CavityConfig) -> float:
    """k_xi = (pi / L)(n - b/2) for the mode normal to the plates"""
    if int(n) != n or n < 1:
        raise UsageError(f"mode number must be a positive integer, got {n}")
    return math.pi / config.plate_separation_L * (n - config.b / 2.0)


def mode_norm_squared(
    metric: LocalMetric, config: CavityConfig, omega: float, k_x: float
) -> float:
    """
    |N|^2 of a Klein-Gordon mode.

    Only the y-orientation couples the continuous k_x to g_tx in the
    denominator; the x-orientation normalization ignores the cross term.

    Raises:
        ModeBranchError: If omega <= 0 or the denominator is not positive
    """
    if not omega > 0:
        raise ModeBranchError(f"mode outside allowed branch: omega={omega} must be positive")
    gt = g_tilde(metric)
    g = metric.g_yy * metric.g_zz * gt
    shift = omega + (metric.g_tt * metric.g_tx / gt) * config.g_xi * k_x
    if not shift > 0:
        raise ModeBranchError(
            f"mode outside allowed branch: omega + (g_tt g_tx/g~) k_x = {shift} <= 0"
        )
    root = math.sqrt(-metric.g_tt * metric.g_xx * metric.g_yy * metric.g_zz)
    return -metric.g_tt * root / (g * (2.0 * math.pi) ** 2 * config.plate_separation_L * shift)


def f_factor(metric: LocalMetric, config: CavityConfig) -> float:
    """F = 1 + G_xi g_tx^2 / g~; exactly 1 for the x-orientation"""
    if config.orientation is Orientation.X:
        return 1.0
    value = 1.0 + metric.g_tx**2 / g_tilde(metric)
    if not value > 0:
        raise MetricInvariantError(
            f"F = {value} <= 0: metric is not an allowed-observer frame", component="g_tt"
        )
    return value


def ratio_R(metric: LocalMetric) -> float:
    """R = sqrt(g_tt g_xx / g~), in (0, 1]; equal to 1 iff g_tx = 0"""
    return math.sqrt(metric.g_tt * metric.g_xx / g_tilde(metric))
