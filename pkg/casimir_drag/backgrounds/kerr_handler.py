from typing import Optional

from .base import BackgroundHandler, BackgroundParams
from .kerr import kerr_equatorial_local_metric, kerr_is_admissible
from ..types import BackgroundType, CriticalSet, KerrParams, LocalMetric


class KerrHandler(BackgroundHandler):
    """Handler for equatorial circular orbits around a Kerr source"""

    background_type = BackgroundType.KERR

    def validate_params(self, params: BackgroundParams) -> bool:
        return isinstance(params, KerrParams)

    def is_admissible(self, margin: float = 1e-12) -> bool:
        return kerr_is_admissible(self.params, margin)

    def local_metric(self, margin: float = 1e-12) -> LocalMetric:
        return kerr_equatorial_local_metric(self.params, margin)

    def critical_set(self) -> Optional[CriticalSet]:
        from ..regimes import kerr_critical_set

        p = self.params
        return kerr_critical_set(p.M, p.a, p.r)
