from typing import Optional

from .base import BackgroundHandler, BackgroundParams
from .cylinder import cylinder_is_admissible, cylinder_local_metric
from ..types import BackgroundType, CriticalSet, CylinderParams, LocalMetric


class CylinderHandler(BackgroundHandler):
    """Handler for the exterior of a moving cylindrical source"""

    background_type = BackgroundType.CYLINDER

    def validate_params(self, params: BackgroundParams) -> bool:
        return isinstance(params, CylinderParams)

    def is_admissible(self, margin: float = 1e-12) -> bool:
        return cylinder_is_admissible(self.params, margin)

    def local_metric(self, margin: float = 1e-12) -> LocalMetric:
        return cylinder_local_metric(self.params, margin)

    def critical_set(self) -> Optional[CriticalSet]:
        # regimes depends on this package
        from ..regimes import cylinder_critical_set

        return cylinder_critical_set(self.params.k, self.params.r)
