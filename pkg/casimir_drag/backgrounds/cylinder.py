"""
Exterior of a cylindrically symmetric source in stationary motion along its
axis, seen from an apparatus moving with velocity v = dx~/dt at fixed r.

Only the patch with cos(2k ln r) > 0 is accepted, so that g_xx < 0.
"""

import logging
import math
from typing import Tuple

from ..errors import CoordinatePatchError, DomainError, ObserverNotTimelikeError
from ..types import CylinderParams, LocalMetric

logger = logging.getLogger(__name__)

_COS_TOL = 1e-12


def cylinder_q_exponents(k: float) -> Tuple[float, float]:
    """(q_-, q_+) = (1 -+ 2 sqrt(1 + 3k^2)) / 3"""
    root = 2.0 * math.sqrt(1.0 + 3.0 * k**2)
    return (1.0 - root) / 3.0, (1.0 + root) / 3.0


def _phase(k: float, r: float) -> Tuple[float, float]:
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    angle = 2.0 * k * math.log(r)
    return math.cos(angle), math.sin(angle)


def check_cylinder_patch(k: float, r: float) -> Tuple[float, float]:
    """(cos, sin) of 2k ln r, or CoordinatePatchError outside the positive-cosine patch"""
    c, s = _phase(k, r)
    if not c > _COS_TOL:
        raise CoordinatePatchError(
            f"coordinate patch invalid at r={r}: cos(2k ln r) = {c:.3e} is not positive"
        )
    return c, s


def cylinder_drag_velocity(k: float, r: float) -> float:
    """v_d = -tan(2k ln r), the velocity at which g_tx vanishes"""
    c, s = _phase(k, r)
    if abs(c) <= _COS_TOL:
        raise DomainError(f"drag velocity undefined at r={r}: cos(2k ln r) = {c:.3e}")
    return -s / c


def cylinder_velocity_bounds(k: float, r: float) -> Tuple[float, float]:
    """(v_-, v_+) = v_d -+ sqrt(v_d^2 + 1), the limits preserving time orientation"""
    v_d = cylinder_drag_velocity(k, r)
    half_width = math.sqrt(v_d**2 + 1.0)
    return v_d - half_width, v_d + half_width


def cylinder_is_admissible(params: CylinderParams, margin: float = 1e-12) -> bool:
    """True when the patch is valid and |v - v_d| < (1 - margin) sqrt(v_d^2 + 1)"""
    c, _ = _phase(params.k, params.r)
    if not c > _COS_TOL:
        return False
    v_d = cylinder_drag_velocity(params.k, params.r)
    return abs(params.v - v_d) < (1.0 - margin) * math.sqrt(v_d**2 + 1.0)


def cylinder_four_velocity_norm(k: float, r: float, v: float) -> float:
    """
    S(k, r, v) normalizing the apparatus four-velocity S (1, v, 0, 0).

    Raises:
        ObserverNotTimelikeError: If the worldline is not timelike
    """
    c, s = check_cylinder_patch(k, r)
    q_minus, _ = cylinder_q_exponents(k)
    # S^-2 equals g_tt of the comoving frame
    norm_sq = r ** (2.0 * q_minus) * ((1.0 - v**2) * c - 2.0 * v * s)
    if not norm_sq > 0:
        raise ObserverNotTimelikeError(f"observer not timelike: v={v} at r={r}, k={k}")
    return 1.0 / math.sqrt(norm_sq)


def cylinder_local_metric(params: CylinderParams, margin: float = 1e-12) -> LocalMetric:
    """
    Comoving-frame metric of the moving apparatus.

    With rho = r^(2 q_-), c = cos(2k ln r), s = sin(2k ln r):
        g_xx = -rho c,  g_tx = g_xx v - rho s,  g_tt = 2 v g_tx - (1 + v^2) g_xx,
        g_yy = -1,      g_zz = -r^(2(q_+ - 1)).

    Raises:
        CoordinatePatchError: If cos(2k ln r) <= 0
        ObserverNotTimelikeError: If v is outside (v_-, v_+)
    """
    k, r, v = params.k, params.r, params.v
    c, s = check_cylinder_patch(k, r)
    if not cylinder_is_admissible(params, margin):
        v_minus, v_plus = cylinder_velocity_bounds(k, r)
        raise ObserverNotTimelikeError(
            f"observer not timelike: v={v} outside ({v_minus:.17g}, {v_plus:.17g})"
        )
    q_minus, q_plus = cylinder_q_exponents(k)
    rho = r ** (2.0 * q_minus)
    g_xx = -rho * c
    g_tx = g_xx * v - rho * s
    g_tt = 2.0 * v * g_tx - (1.0 + v**2) * g_xx
    g_zz = -(r ** (2.0 * (q_plus - 1.0)))
    if g_tt < 1e-8 * abs(g_xx):
        logger.debug("cylinder frame close to the velocity bound: g_tt=%.3e at v=%g", g_tt, v)
    return LocalMetric(g_tt=g_tt, g_tx=g_tx, g_xx=g_xx, g_yy=-1.0, g_zz=g_zz)
