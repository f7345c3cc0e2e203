"""
SI <-> geometric unit conversions (hbar = c = G = 1, lengths in metres).

For every kind, geometric = SI * factor. Constants come from scipy.constants
(CODATA); the solar mass uses the IAU nominal mass parameter GM_sun.
"""

import math
from typing import Dict

from scipy import constants

from .errors import UsageError

# IAU 2015 nominal solar mass parameter, m^3 s^-2
GM_SUN = 1.3271244e20
SOLAR_MASS_LENGTH = GM_SUN / constants.c**2

_FACTORS: Dict[str, float] = {
    "mass_kg": constants.G / constants.c**2,  # kg -> m
    "mass_solar": SOLAR_MASS_LENGTH,  # M_sun -> m
    "angular_velocity_si": 1.0 / constants.c,  # rad/s -> 1/m
    "velocity_si": 1.0 / constants.c,  # m/s -> dimensionless
    "length_m": 1.0,
    "field_mass_kg": constants.c / constants.hbar,  # kg -> 1/m
    "energy_density_geometric": 1.0 / (constants.hbar * constants.c),  # J/m^3 -> 1/m^4
}

UNIT_KINDS = tuple(_FACTORS)
DIRECTIONS = ("to_geometric", "to_si")


def convert_units(value: float, kind: str, direction: str = "to_geometric") -> float:
    """
    Convert value between SI and geometric units.

    Args:
        value: Finite number in the source unit system
        kind: One of UNIT_KINDS
        direction: "to_geometric" or "to_si"

    Raises:
        UsageError: For an unknown kind or direction or a non-finite value
    """
    if kind not in _FACTORS:
        raise UsageError(f"unknown unit kind '{kind}'; expected one of {', '.join(UNIT_KINDS)}")
    if direction not in DIRECTIONS:
        raise UsageError(f"direction must be 'to_geometric' or 'to_si', got '{direction}'")
    value = float(value)
    if not math.isfinite(value):
        raise UsageError(f"value must be finite, got {value}")
    factor = _FACTORS[kind]
    return value * factor if direction == "to_geometric" else value / factor
