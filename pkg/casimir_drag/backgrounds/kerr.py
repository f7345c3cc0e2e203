"""
Kerr geometry in Boyer-Lindquist coordinates restricted to the equatorial
plane (theta = pi/2, Sigma = r^2), seen from an apparatus on a circular orbit
with angular velocity Omega.
"""

import logging
import math
from typing import Tuple

from ..errors import DomainError, HorizonError, ObserverNotTimelikeError
from ..types import KerrParams, LocalMetric

logger = logging.getLogger(__name__)


def kerr_horizon_radius(M: float, a: float) -> float:
    """Outer horizon r_+ = M + sqrt(M^2 - a^2)"""
    if not M > 0:
        raise DomainError(f"M must be positive, got {M}")
    if abs(a) > M:
        raise DomainError(f"|a| must not exceed M (got a={a}, M={M})")
    return M + math.sqrt(M**2 - a**2)


def kerr_auxiliaries(M: float, a: float, r: float) -> Tuple[float, float, float]:
    """
    Equatorial (Sigma, Delta, A).

    Raises:
        HorizonError: If r is not outside the outer horizon
    """
    r_plus = kerr_horizon_radius(M, a)
    delta = r**2 + a**2 - 2.0 * M * r
    if not (r > r_plus and delta > 0):
        raise HorizonError(f"r={r} is not outside the horizon r_+={r_plus:.17g}")
    sigma = r**2
    big_a = (r**2 + a**2) * sigma + 2.0 * M * r * a**2
    return sigma, delta, big_a


def kerr_drag_angular_velocity(M: float, a: float, r: float) -> float:
    """omega_d = 2 M a r / A"""
    _, _, big_a = kerr_auxiliaries(M, a, r)
    return 2.0 * M * a * r / big_a


def kerr_angular_velocity_bounds(M: float, a: float, r: float) -> Tuple[float, float]:
    """(Omega_-, Omega_+) = omega_d -+ Sigma sqrt(Delta) / A"""
    sigma, delta, big_a = kerr_auxiliaries(M, a, r)
    omega_d = 2.0 * M * a * r / big_a
    half_width = sigma * math.sqrt(delta) / big_a
    return omega_d - half_width, omega_d + half_width


def kerr_is_admissible(params: KerrParams, margin: float = 1e-12) -> bool:
    """True outside the horizon with |Omega - omega_d| < (1 - margin) r^2 sqrt(Delta)/A"""
    try:
        sigma, delta, big_a = kerr_auxiliaries(params.M, params.a, params.r)
    except DomainError:
        return False
    omega_d = 2.0 * params.M * params.a * params.r / big_a
    return abs(params.Omega - omega_d) < (1.0 - margin) * sigma * math.sqrt(delta) / big_a


def _require_admissible(params: KerrParams, margin: float) -> Tuple[float, float, float, float]:
    sigma, delta, big_a = kerr_auxiliaries(params.M, params.a, params.r)
    if not kerr_is_admissible(params, margin):
        lo, hi = kerr_angular_velocity_bounds(params.M, params.a, params.r)
        raise ObserverNotTimelikeError(
            f"observer not timelike: Omega={params.Omega} outside ({lo:.17g}, {hi:.17g})"
        )
    omega_d = 2.0 * params.M * params.a * params.r / big_a
    return sigma, delta, big_a, params.Omega - omega_d


def kerr_equatorial_local_metric(params: KerrParams, margin: float = 1e-12) -> LocalMetric:
    """
    Comoving-frame metric of the orbiting apparatus (dx = r dphi', dy = dr, dz = r dtheta):
        g_tt = (Delta Sigma / A) [1 - A^2 (Omega - omega_d)^2 / (Delta Sigma^2)],
        g_tx = -(A / r^3)(Omega - omega_d),  g_xx = -A / r^4,
        g_yy = -r^2 / Delta,                 g_zz = -1.

    Raises:
        HorizonError: If r is not outside the horizon
        ObserverNotTimelikeError: If Omega is outside (Omega_-, Omega_+)
    """
    sigma, delta, big_a, shift = _require_admissible(params, margin)
    r = params.r
    g_tt = (delta * sigma / big_a) * (1.0 - big_a**2 * shift**2 / (delta * sigma**2))
    g_xx = -big_a / r**4
    if g_tt < 1e-8 * abs(g_xx):
        logger.debug("Kerr frame close to the angular velocity bound: g_tt=%.3e", g_tt)
    return LocalMetric(
        g_tt=g_tt,
        g_tx=-(big_a / r**3) * shift,
        g_xx=g_xx,
        g_yy=-(r**2) / delta,
        g_zz=-1.0,
    )


def kerr_R(params: KerrParams, margin: float = 1e-12) -> float:
    """
    R = [1 - A^2 (Omega - omega_d)^2 / (r^4 Delta)]^(1/2), in (0, 1].

    Raises:
        ObserverNotTimelikeError: If the radicand is not positive
    """
    _, delta, big_a, shift = _require_admissible(params, margin)
    radicand = 1.0 - big_a**2 * shift**2 / (params.r**4 * delta)
    if not radicand > 0:
        raise ObserverNotTimelikeError(f"observer not timelike: R^2 = {radicand}")
    return math.sqrt(radicand)
