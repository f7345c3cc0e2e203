from .base import BackgroundHandler, BackgroundParams
from .flat_handler import FlatHandler
from .cylinder import (
    check_cylinder_patch,
    cylinder_drag_velocity,
    cylinder_four_velocity_norm,
    cylinder_is_admissible,
    cylinder_local_metric,
    cylinder_q_exponents,
    cylinder_velocity_bounds,
)
from .cylinder_handler import CylinderHandler
from .kerr import (
    kerr_angular_velocity_bounds,
    kerr_auxiliaries,
    kerr_drag_angular_velocity,
    kerr_equatorial_local_metric,
    kerr_horizon_radius,
    kerr_is_admissible,
    kerr_R,
)
from .kerr_handler import KerrHandler

__all__ = [
    "BackgroundHandler",
    "BackgroundParams",
    "FlatHandler",
    "CylinderHandler",
    "KerrHandler",
    "check_cylinder_patch",
    "cylinder_drag_velocity",
    "cylinder_four_velocity_norm",
    "cylinder_is_admissible",
    "cylinder_local_metric",
    "cylinder_q_exponents",
    "cylinder_velocity_bounds",
    "kerr_angular_velocity_bounds",
    "kerr_auxiliaries",
    "kerr_drag_angular_velocity",
    "kerr_equatorial_local_metric",
    "kerr_horizon_radius",
    "kerr_is_admissible",
    "kerr_R",
]
